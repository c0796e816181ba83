#pragma once

// Exact order formulas for the finite simple groups, the parameterized table
// transcriptions (loaded from data/tables.dat), the sporadic literal data,
// and the corpus manifest of embedded permutation groups.

#include "gkv/arith.hpp"
#include "gkv/expr.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gkv {

// ---------------------------------------------------------------------------
// order formulas

enum class Family { Alt, A, TwoA, B, C, D, TwoD, G2, F4, E6, TwoE6, E7, E8,
                    TwoB2, TwoG2, ThreeD4, TwoF4, TwoF4_2prime, Sporadic };

inline Family family_from_string(const std::string& s) {
  static const std::map<std::string, Family> m = {
      {"Alt", Family::Alt}, {"A", Family::A},     {"2A", Family::TwoA},
      {"B", Family::B},     {"C", Family::C},     {"D", Family::D},
      {"2D", Family::TwoD}, {"G2", Family::G2},   {"F4", Family::F4},
      {"E6", Family::E6},   {"2E6", Family::TwoE6}, {"E7", Family::E7},
      {"E8", Family::E8},   {"2B2", Family::TwoB2}, {"2G2", Family::TwoG2},
      {"3D4", Family::ThreeD4}, {"2F4", Family::TwoF4}};
  auto it = m.find(s);
  if (it == m.end()) throw std::invalid_argument("unknown family: " + s);
  return it->second;
}

struct SimpleGroupId {
  Family family;
  unsigned n = 0;  // rank (or number of points for Alt)
  Nat q = 0;       // field size where applicable
  std::string name;  // sporadic name
};

namespace db_detail {

inline void require_prime_power(const Nat& q) {
  if (q < 2) throw std::domain_error("q must be a prime power >= 2");
  Factorization f = factorize(q);
  if (f.factors.size() != 1) throw std::domain_error("q = " + q.str() + " is not a prime power");
}

inline Factorization fact_pow(const Nat& q, unsigned long e) {
  return factorize(q).pow(static_cast<unsigned>(e));
}

}  // namespace db_detail

// |S| as a Factorization assembled from cyclotomic pieces (never factoring
// the full product blindly)
inline Factorization order_factorization(Family fam, unsigned n, const Nat& q) {
  using db_detail::fact_pow;
  Factorization f;
  auto minus = [&](unsigned i) { f *= factor_pow_minus_1(q, i); };
  auto plus = [&](unsigned i) { f *= factor_pow_plus_1(q, i); };
  switch (fam) {
    case Family::Alt: {
      // n!/2
      Nat v = 1;
      for (unsigned k = 3; k <= n; ++k) v *= k;  // n!/2 = prod(3..n)
      return factorize(v);
    }
    case Family::A: {
      db_detail::require_prime_power(q);
      if (n < 1) throw std::domain_error("A_n: n >= 1");
      f = fact_pow(q, std::uint64_t(n) * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) minus(i);
      f.divide_exact(factorize(nat_gcd(Nat(n + 1), q - 1)));
      return f;
    }
    case Family::TwoA: {
      db_detail::require_prime_power(q);
      f = fact_pow(q, std::uint64_t(n) * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i)
        (i % 2 == 0) ? minus(i) : plus(i);
      f.divide_exact(factorize(nat_gcd(Nat(n + 1), q + 1)));
      return f;
    }
    case Family::B:
    case Family::C: {
      db_detail::require_prime_power(q);
      f = fact_pow(q, std::uint64_t(n) * n);
      for (unsigned i = 1; i <= n; ++i) minus(2 * i);
      f.divide_exact(factorize(nat_gcd(Nat(2), q - 1)));
      return f;
    }
    case Family::D: {
      db_detail::require_prime_power(q);
      f = fact_pow(q, std::uint64_t(n) * (n - 1));
      minus(n);
      for (unsigned i = 1; i + 1 <= n; ++i) minus(2 * i);
      f.divide_exact(factorize(nat_gcd(Nat(4), nat_pow(q, n) - 1)));
      return f;
    }
    case Family::TwoD: {
      db_detail::require_prime_power(q);
      f = fact_pow(q, std::uint64_t(n) * (n - 1));
      plus(n);
      for (unsigned i = 1; i + 1 <= n; ++i) minus(2 * i);
      f.divide_exact(factorize(nat_gcd(Nat(4), nat_pow(q, n) + 1)));
      return f;
    }
    case Family::G2:
      f = fact_pow(q, 6);
      minus(6);
      minus(2);
      return f;
    case Family::F4:
      f = fact_pow(q, 24);
      for (unsigned i : {12u, 8u, 6u, 2u}) minus(i);
      return f;
    case Family::E6:
      f = fact_pow(q, 36);
      for (unsigned i : {12u, 9u, 8u, 6u, 5u, 2u}) minus(i);
      f.divide_exact(factorize(nat_gcd(Nat(3), q - 1)));
      return f;
    case Family::TwoE6:
      f = fact_pow(q, 36);
      for (unsigned i : {12u, 8u, 6u, 2u}) minus(i);
      plus(9);
      plus(5);
      f.divide_exact(factorize(nat_gcd(Nat(3), q + 1)));
      return f;
    case Family::E7:
      f = fact_pow(q, 63);
      for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) minus(i);
      f.divide_exact(factorize(nat_gcd(Nat(2), q - 1)));
      return f;
    case Family::E8:
      f = fact_pow(q, 120);
      for (unsigned i : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) minus(i);
      return f;
    case Family::TwoB2:
      f = fact_pow(q, 2);
      plus(2);
      minus(1);
      return f;
    case Family::TwoG2:
      f = fact_pow(q, 3);
      plus(3);
      minus(1);
      return f;
    case Family::ThreeD4:
      f = fact_pow(q, 12);
      // q^8 + q^4 + 1 = Phi_3(q^2) * Phi_6(q^2) -- assemble via q^12-1 pieces:
      // (q^8+q^4+1) = (q^12-1)/(q^4-1)
      f *= factor_pow_minus_1(q, 12);
      f.divide_exact(factor_pow_minus_1(q, 4));
      minus(6);
      minus(2);
      return f;
    case Family::TwoF4:
      f = fact_pow(q, 12);
      plus(6);
      minus(4);
      plus(3);
      minus(1);
      return f;
    default:
      throw std::domain_error("order_factorization: unsupported family");
  }
}

struct SporadicOrder {
  std::string name;
  Nat order;
  Factorization factored;
};

struct SporadicRow {
  std::string name;
  Nat u;
  std::set<Nat> pi_a_over_n;
  std::set<Nat> pi_c;
  std::string flags;
};

struct LieRow {
  unsigned table = 0;
  std::string rid;
  std::string family;
  std::string label;
  std::string scheme;   // pq, nq, q, p3, n2, n3, m2, m3, lit
  Nat fixedq = 0;
  std::string condition;
  std::string u_expr;
  std::string w_expr;
  std::string theta0;   // comma list of ints / 'p' / 'r'
  std::string quot_expr;
  std::string flags;
};

struct TablesData {
  unsigned version = 0;
  std::vector<LieRow> rows;
  std::vector<SporadicRow> sporadic;
  std::vector<SporadicOrder> sporadic_orders;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(cur);
  return out;
}

inline std::set<Nat> parse_nat_set(const std::string& csv) {
  std::set<Nat> out;
  if (csv.empty()) return out;
  for (const std::string& part : split(csv, ',')) out.insert(Nat(part));
  return out;
}

inline TablesData load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tables file: " + path);
  TablesData td;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '|');
    if (f[0] == "version") {
      td.version = std::stoul(f.at(1));
    } else if (f[0] == "lierow") {
      LieRow r;
      r.table = std::stoul(f.at(1));
      r.rid = f.at(2);
      r.family = f.at(3);
      r.label = f.at(4);
      r.scheme = f.at(5);
      r.fixedq = f.at(6).empty() ? Nat(0) : Nat(f.at(6));
      r.condition = f.at(7);
      r.u_expr = f.at(8);
      r.w_expr = f.at(9);
      r.theta0 = f.at(10);
      r.quot_expr = f.size() > 11 ? f.at(11) : "";
      r.flags = f.size() > 12 ? f.at(12) : "";
      td.rows.push_back(std::move(r));
    } else if (f[0] == "sprow") {
      SporadicRow r;
      r.name = f.at(1);
      r.u = Nat(f.at(2));
      r.pi_a_over_n = parse_nat_set(f.at(3));
      r.pi_c = parse_nat_set(f.at(4));
      r.flags = f.size() > 5 ? f.at(5) : "";
      td.sporadic.push_back(std::move(r));
    } else if (f[0] == "sporder") {
      SporadicOrder so;
      so.name = f.at(1);
      so.order = Nat(f.at(2));
      so.factored.value = 1;
      for (const std::string& part : split(f.at(3), ',')) {
        auto caret = part.find('^');
        Nat p = Nat(caret == std::string::npos ? part : part.substr(0, caret));
        unsigned e = caret == std::string::npos ? 1 : std::stoul(part.substr(caret + 1));
        so.factored.factors[p] = e;
        so.factored.value *= nat_pow(p, e);
      }
      td.sporadic_orders.push_back(std::move(so));
    } else {
      throw std::runtime_error("tables file: unknown record '" + f[0] + "'");
    }
  }
  if (td.version != 1) throw std::runtime_error("tables file: unsupported version");
  return td;
}

inline const SporadicOrder& sporadic_order(const TablesData& td, const std::string& name) {
  for (const auto& so : td.sporadic_orders)
    if (so.name == name) return so;
  throw std::invalid_argument("unknown sporadic group: " + name);
}

inline Nat order_of(const TablesData& td, const SimpleGroupId& id) {
  if (id.family == Family::Sporadic) return sporadic_order(td, id.name).order;
  if (id.family == Family::TwoF4_2prime) {
    return order_factorization(Family::TwoF4, 4, 2).value / 2;
  }
  return order_factorization(id.family, id.n, id.q).value;
}

// ---------------------------------------------------------------------------
// row instantiation

struct Bounds {
  unsigned qmax = 32;
  unsigned pmax = 13;
  unsigned nmax = 13;
};

struct LieInstance {
  const LieRow* row;
  ExprEnv env;          // p/q/n/m/eps/rtq/r as bound
  unsigned rank;        // classical rank fed to the order formula
  Nat u;
  Nat w;
  Rat quot;
  Factorization order;  // |S|
  std::set<Nat> theta0;
  std::string param_label;  // e.g. "p=3,q=3"
};

namespace db_detail {

inline bool is_power_of_2(unsigned v) { return v >= 1 && (v & (v - 1)) == 0; }

inline std::vector<unsigned> prime_powers_upto(unsigned lim) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= lim; ++q) {
    unsigned x = q, base = 0;
    for (unsigned d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        base = d;
        break;
      }
    if (base == 0) {
      out.push_back(q);  // prime
      continue;
    }
    while (x % base == 0) x /= base;
    if (x == 1) out.push_back(q);
  }
  return out;
}

inline std::vector<unsigned> odd_primes_upto(unsigned lim) {
  std::vector<unsigned> out;
  for (unsigned p = 3; p <= lim; p += 2) {
    bool ok = true;
    for (unsigned d = 3; d * d <= p; d += 2)
      if (p % d == 0) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

// q = base^e with e an odd prime and base in {2,3} -> e, else 0
inline unsigned field_prime_exponent(unsigned q) {
  for (unsigned base : {2u, 3u}) {
    unsigned e = 0, m = q;
    while (m % base == 0) {
      m /= base;
      ++e;
    }
    if (m == 1 && e >= 3 && e % 2 == 1) {
      bool prime = true;
      for (unsigned d = 2; d * d <= e; ++d)
        if (e % d == 0) prime = false;
      if (prime) return e;
    }
  }
  return 0;
}

// per-row condition + binding; true means instantiate with env completed
inline bool bind_row(const LieRow& r, ExprEnv& env) {
  auto getu = [&](const char* k) { return to_u64(env.at(k)); };
  const std::string& id = r.rid;
  if (id == "A_pm1") {
    auto p = getu("p"), q = getu("q");
    return !((p == 3 && q == 2) || (p == 3 && q == 4));
  }
  if (id == "A_p") return (getu("p") + 1) % (getu("q") - 1) == 0;
  if (id == "2A_pm1") return !(getu("p") == 3 && getu("q") == 2);
  if (id == "2A_p") return (getu("p") + 1) % (getu("q") + 1) == 0;
  if (id == "B_n") return getu("n") >= 4 && is_power_of_2(getu("n")) && getu("q") % 2 == 1;
  if (id == "B_p3") return true;
  if (id == "C_p") return getu("q") == 2 || getu("q") == 3;
  if (id == "D_p1")
    return (getu("q") == 2 || getu("q") == 3) && getu("p") + 1 <= getu("nmax");
  if (id == "C_n") return getu("n") >= 4 && is_power_of_2(getu("n"));
  if (id == "D_p") return getu("p") >= 5 && (getu("q") == 2 || getu("q") == 3 || getu("q") == 5);
  if (id == "2D_n") return getu("n") >= 4 && getu("q") >= 4 && is_power_of_2(getu("q"));
  if (id == "2D_n2") return getu("n") >= 5 && is_power_of_2(getu("n") - 1);
  if (id == "2D_p3") return getu("p") >= 5 && !is_power_of_2(getu("p") - 1);
  if (id == "2D_n3") {
    unsigned n = getu("n");
    if (!(n >= 9 && is_power_of_2(n - 1))) return false;
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0) return true;  // n composite
    return false;
  }
  if (id == "G2") {
    unsigned q = getu("q");
    if (q <= 2 || q % 3 == 0) return false;
    env["eps"] = (q % 3 == 1) ? Nat(1) : Nat(-1);
    return true;
  }
  if (id == "3D4") return true;
  if (id == "F4") return getu("q") % 2 == 1;
  if (id == "E6") return true;
  if (id == "2E6") return getu("q") > 2;
  if (id == "A1_odd") {
    unsigned q = getu("q");
    if (!(q > 3 && q % 2 == 1)) return false;
    env["eps"] = (q % 4 == 1) ? Nat(1) : Nat(-1);
    return true;
  }
  if (id == "A1_even_p" || id == "A1_even_m")
    return getu("q") > 2 && is_power_of_2(getu("q"));
  if (id == "A1_fld") {
    unsigned e = field_prime_exponent(getu("q"));
    if (e == 0) return false;
    env["r"] = e;
    return true;
  }
  if (id == "A2_even_p" || id == "A2_even_m") {
    unsigned q = getu("q");
    return q > 2 && q % 2 == 0 && q % 3 != 1;
  }
  if (id == "2D_p3_a" || id == "2D_p3_b")
    return getu("p") >= 5 && is_power_of_2(getu("p") - 1);
  if (id == "G2_3_p" || id == "G2_3_m") return getu("q") % 3 == 0;
  if (id == "F4_even_a" || id == "F4_even_b") return getu("q") % 2 == 0;
  if (id == "2G2_p" || id == "2G2_m" || id == "2F4_a" || id == "2F4_b" ||
      id == "2B2_a" || id == "2B2_b" || id == "2B2_c")
    return true;  // scheme m2/m3 already restricts q
  if (id == "E8_t1" || id == "E8_t2" || id == "E8_t3") return true;
  if (id == "E8_t4") {
    unsigned m5 = getu("q") % 5;
    return m5 == 0 || m5 == 1 || m5 == 4;
  }
  if (r.scheme == "lit") return true;
  throw std::logic_error("bind_row: unhandled row id " + id);
}

inline unsigned rank_of(const LieRow& r, const ExprEnv& env) {
  auto get = [&](const char* k) { return static_cast<unsigned>(to_u64(env.at(k))); };
  const std::string& id = r.rid;
  if (id == "A_pm1" || id == "2A_pm1") return get("p") - 1;
  if (id == "A_p" || id == "2A_p") return get("p");
  if (id == "B_n" || id == "C_n" || id == "2D_n" || id == "2D_n2" || id == "2D_n3")
    return get("n");
  if (id == "B_p3" || id == "C_p" || id == "D_p" || id == "2D_p3" || id == "2D_p3_a" ||
      id == "2D_p3_b")
    return get("p");
  if (id == "D_p1") return get("p") + 1;
  if (id == "A1_odd" || id == "A1_even_p" || id == "A1_even_m" || id == "A1_fld") return 1;
  if (id == "A2_even_p" || id == "A2_even_m") return 2;
  if (id == "2A_32") return 3;
  if (id == "2A_52_a" || id == "2A_52_b") return 5;
  if (id == "A2_4_a" || id == "A2_4_b" || id == "A2_4_c") return 2;
  return 0;  // exceptional families ignore the rank argument
}

}  // namespace db_detail

inline std::set<Nat> resolve_theta0(const LieRow& row, const ExprEnv& env) {
  std::set<Nat> out;
  if (row.theta0.empty()) return out;
  for (const std::string& tok : split(row.theta0, ',')) {
    if (tok == "p" || tok == "r")
      out.insert(env.at(tok));
    else
      out.insert(Nat(tok));
  }
  return out;
}

inline std::vector<LieInstance> instantiate_row(const LieRow& row, const Bounds& b) {
  using namespace db_detail;
  std::vector<ExprEnv> envs;
  auto add_env = [&](ExprEnv e) { envs.push_back(std::move(e)); };
  if (row.scheme == "pq") {
    for (unsigned p : odd_primes_upto(b.pmax))
      for (unsigned q : prime_powers_upto(b.qmax)) add_env({{"p", p}, {"q", q}});
  } else if (row.scheme == "nq") {
    for (unsigned n = 2; n <= b.nmax; ++n)
      for (unsigned q : prime_powers_upto(b.qmax)) add_env({{"n", n}, {"q", q}});
  } else if (row.scheme == "p3") {
    if (b.qmax >= 3)
      for (unsigned p : odd_primes_upto(b.pmax)) add_env({{"p", p}, {"q", 3}});
  } else if (row.scheme == "n2" || row.scheme == "n3") {
    unsigned fq = row.scheme == "n2" ? 2u : 3u;
    if (b.qmax >= fq)
      for (unsigned n = 2; n <= b.nmax; ++n) add_env({{"n", n}, {"q", fq}});
  } else if (row.scheme == "q") {
    for (unsigned q : prime_powers_upto(b.qmax)) add_env({{"q", q}});
  } else if (row.scheme == "m2" || row.scheme == "m3") {
    unsigned base = row.scheme == "m2" ? 2 : 3;
    for (unsigned m = 1;; ++m) {
      std::uint64_t q = 1;
      for (unsigned k = 0; k < 2 * m + 1; ++k) q *= base;
      if (q > b.qmax) break;
      std::uint64_t rtq = 1;
      for (unsigned k = 0; k < m + 1; ++k) rtq *= base;
      add_env({{"q", q}, {"m", m}, {"rtq", rtq}});
    }
  } else if (row.scheme == "lit") {
    if (row.fixedq >= 2 && row.fixedq <= b.qmax) add_env({{"q", row.fixedq}});
  } else {
    throw std::logic_error("unknown scheme " + row.scheme);
  }

  std::vector<LieInstance> out;
  for (ExprEnv env : envs) {
    env["nmax"] = b.nmax;
    if (!db_detail::bind_row(row, env)) continue;
    env.erase("nmax");
    LieInstance inst;
    inst.row = &row;
    inst.rank = db_detail::rank_of(row, env);
    // non-simple small cases
    Family fam = family_from_string(row.family);
    unsigned qq = static_cast<unsigned>(to_u64(env.at("q")));
    if (fam == Family::A && inst.rank == 1 && qq <= 3) continue;
    inst.env = env;
    inst.u = eval_expr(row.u_expr, env);
    inst.w = eval_expr(row.w_expr, env);
    inst.quot = eval_expr_rational(row.quot_expr, env);
    inst.order = order_factorization(fam, inst.rank, Nat(qq));
    inst.theta0 = resolve_theta0(row, env);
    std::string lbl;
    for (const char* k : {"p", "q", "n"}) {
      if (env.count(k)) {
        if (!lbl.empty()) lbl += ",";
        lbl += std::string(k) + "=" + env.at(k).str();
      }
    }
    inst.param_label = lbl;
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<LieInstance> instantiate_rows(const TablesData& td, const Bounds& b,
                                                 unsigned table = 0) {
  std::vector<LieInstance> out;
  for (const LieRow& row : td.rows) {
    if (table != 0 && row.table != table) continue;
    auto instances = instantiate_row(row, b);
    for (auto& i : instances) out.push_back(std::move(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// corpus manifest

struct CorpusEntry {
  std::string label;
  std::string file;  // relative to the groups directory
  Nat expected_order;
  std::string note;
};

inline std::vector<CorpusEntry> load_corpus(const std::string& data_dir) {
  std::ifstream in(data_dir + "/corpus.manifest");
  if (!in) throw std::runtime_error("cannot open corpus manifest under " + data_dir);
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split(line, '|');
    out.push_back({f.at(0), f.at(1), Nat(f.at(2)), f.size() > 3 ? f.at(3) : ""});
  }
  return out;
}

// 64-bit FNV-1a over a file, for pinning the table data in tests
inline std::uint64_t fnv64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gkv
