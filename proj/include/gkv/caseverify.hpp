#pragma once

// Mechanical re-run of the tabulated case analysis: per-row prime-set checks
// over the Lie tables, the sporadic containment table, the number-theoretic
// scans, and the corpus property suite, folded into a deterministic report.

#include "gkv/frobstruct.hpp"
#include "gkv/gkgraph.hpp"
#include "gkv/groupfile.hpp"
#include "gkv/simpledb.hpp"
#include "gkv/spectra.hpp"
#include "gkv/version.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gkv {

enum class Verdict { fails_as_paper_claims, holds_as_paper_claims, exception_confirmed,
                     discrepancy };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::fails_as_paper_claims: return "fails_as_paper_claims";
    case Verdict::holds_as_paper_claims: return "holds_as_paper_claims";
    case Verdict::exception_confirmed: return "exception_confirmed";
    default: return "discrepancy";
  }
}

// a computed side of a check: a pi-set or a natural number
struct CheckValue {
  bool is_set = false;
  std::vector<Nat> primes;
  Nat number = 0;

  static CheckValue pi(const std::set<Nat>& s) {
    CheckValue v;
    v.is_set = true;
    v.primes.assign(s.begin(), s.end());
    return v;
  }
  static CheckValue nat(const Nat& n) {
    CheckValue v;
    v.number = n;
    return v;
  }
};

struct CheckResult {
  std::string check_id;
  std::string anchor;    // which tabulated claim the check re-runs
  std::string instance;
  CheckValue lhs, rhs;
  Verdict verdict = Verdict::holds_as_paper_claims;
  bool fatal = false;    // an unexpected contradiction of a claimed outcome
  std::string detail;
};

struct VerificationReport {
  std::string version = kVersion;
  Bounds bounds;
  std::vector<CheckResult> checks;

  std::map<std::string, std::uint64_t> summary() const {
    std::map<std::string, std::uint64_t> s{{"fails_as_paper_claims", 0},
                                           {"holds_as_paper_claims", 0},
                                           {"exception_confirmed", 0},
                                           {"discrepancy", 0},
                                           {"contradictions", 0}};
    for (const auto& c : checks) {
      s[verdict_name(c.verdict)] += 1;
      if (c.fatal) s["contradictions"] += 1;
    }
    return s;
  }

  bool contradiction_free() const {
    for (const auto& c : checks)
      if (c.fatal) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// helpers

namespace cv_detail {

inline std::set<Nat> pi_of_nat(const Nat& n) { return prime_set(n); }

// signed exponent vector of a rational built from factorizations
struct SignedFactors {
  std::map<Nat, long> exp;

  void add(const Factorization& f, long sign) {
    for (const auto& [p, e] : f.factors) exp[p] += sign * long(e);
  }
  std::set<Nat> positive_primes() const {
    std::set<Nat> out;
    for (const auto& [p, e] : exp)
      if (e > 0) out.insert(p);
    return out;
  }
};

inline bool subset(const std::set<Nat>& a, const std::set<Nat>& b) {
  for (const Nat& x : a)
    if (!b.count(x)) return false;
  return true;
}

inline std::string set_to_string(const std::set<Nat>& s) {
  std::string out = "{";
  bool first = true;
  for (const Nat& p : s) {
    if (!first) out += ",";
    out += p.str();
    first = false;
  }
  return out + "}";
}

inline std::string instance_label(const LieInstance& inst) {
  std::ostringstream os;
  os << "table" << inst.row->table << "/" << inst.row->label;
  if (!inst.param_label.empty()) os << " " << inst.param_label;
  os << " |U|=" << inst.u.str();
  return os.str();
}

}  // namespace cv_detail

// ---------------------------------------------------------------------------
// Lemma: if m | n and pi(n/m) subset pi(m), then pi(m) = pi(n).
// Returns whether the hypothesis held; asserts the conclusion when it did.
inline bool check_pi_lemma(const Nat& m, const Nat& n) {
  if (m < 1 || n < 1) throw std::domain_error("check_pi_lemma: positive arguments");
  if (n % m != 0) return false;
  std::set<Nat> pm = prime_set(m);
  if (!cv_detail::subset(prime_set(n / m), pm)) return false;
  if (prime_set(n) != pm)
    throw std::logic_error("pi lemma violated; arithmetic is broken");
  return true;
}

// ---------------------------------------------------------------------------
// per-instance table checks

// containment pi(|S|/(|U||W|)) subset pi(theta0 |W|); the quotient is an
// exact rational and pi() is taken of its reduced numerator
inline CheckResult check_eq35(const LieInstance& inst) {
  using namespace cv_detail;
  CheckResult r;
  r.check_id = "lie-quotient-containment";
  r.anchor = "eq-3.5";
  r.instance = instance_label(inst);
  SignedFactors sf;
  sf.add(inst.order, +1);
  sf.add(factorize(inst.u), -1);
  sf.add(factorize(inst.w), -1);
  std::set<Nat> lhs = sf.positive_primes();
  std::set<Nat> rhs = prime_set(inst.w);
  rhs.insert(inst.theta0.begin(), inst.theta0.end());
  r.lhs = CheckValue::pi(lhs);
  r.rhs = CheckValue::pi(rhs);
  if (subset(lhs, rhs)) {
    r.verdict = Verdict::holds_as_paper_claims;
  } else {
    r.verdict = Verdict::fails_as_paper_claims;
    for (const Nat& p : lhs)
      if (!rhs.count(p)) {
        r.detail = "witness prime " + p.str();
        break;
      }
  }
  return r;
}

// equality pi(|S|/|U|) = pi(|W|); not applicable to the A1(q) rows with
// theta0 = r (the field-automorphism prime)
inline std::optional<CheckResult> check_eq36(const LieInstance& inst) {
  using namespace cv_detail;
  if (inst.row->rid == "A1_fld") return std::nullopt;
  CheckResult r;
  r.check_id = "lie-u-prime-equality";
  r.anchor = "eq-3.6";
  r.instance = instance_label(inst);
  Factorization su = inst.order;
  su.divide_exact(factorize(inst.u));
  std::set<Nat> lhs = su.prime_set();
  std::set<Nat> rhs = prime_set(inst.w);
  r.lhs = CheckValue::pi(lhs);
  r.rhs = CheckValue::pi(rhs);
  if (lhs == rhs) {
    r.verdict = Verdict::holds_as_paper_claims;
  } else {
    r.verdict = Verdict::fails_as_paper_claims;
    std::optional<Nat> witness;
    for (const Nat& p : lhs)
      if (!rhs.count(p)) {
        witness = p;
        break;
      }
    if (witness) {
      r.detail = "witness prime " + witness->str();
      // primitive-prime linkage: if the witness is a primitive prime divisor
      // of q^k - 1, the zsigmondy operation must reproduce one at level k
      Nat q = inst.env.count("q") ? inst.env.at("q") : Nat(0);
      if (q >= 2 && *witness > 2 && q % *witness != 0) {
        Nat k = multiplicative_order(q, *witness);
        if (k >= 2 && k <= 64) {
          auto z = zsigmondy(q, static_cast<unsigned>(to_u64(k)));
          if (!z || *z > *witness)
            throw std::logic_error("zsigmondy linkage failed for witness " + witness->str());
          r.detail += " (primitive for q^" + k.str() + "-1)";
        }
      }
    } else {
      r.detail = "pi(|S|/|U|) is a proper subset of pi(|W|)";
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// number-theoretic scans

inline std::vector<CheckResult> scan_l2r(unsigned r_max) {
  using namespace cv_detail;
  if (r_max < 5) throw std::domain_error("scan_l2r: r_max >= 5");
  std::vector<CheckResult> out;
  {
    CheckResult b;
    b.check_id = "l2r-sylow-containment";
    b.anchor = "sec3-L2(r)";
    b.instance = "r=3 (boundary, L2(3) not simple)";
    b.lhs = CheckValue::pi(prime_set(4));
    b.rhs = CheckValue::pi(prime_set(1));
    b.verdict = Verdict::exception_confirmed;
    out.push_back(std::move(b));
  }
  for (std::uint32_t r : small_primes()) {
    if (r < 5) continue;
    if (r > r_max) break;
    CheckResult c;
    c.check_id = "l2r-sylow-containment";
    c.anchor = "sec3-L2(r)";
    c.instance = "r=" + std::to_string(r);
    Nat half_plus = Nat(r + 1) / 2, half_minus = Nat(r - 1) / 2;
    if (nat_gcd(half_plus, half_minus) != 1)
      throw std::logic_error("(r+1)/2 and (r-1)/2 are not coprime");
    std::set<Nat> lhs = prime_set(Nat(r) + 1);
    std::set<Nat> rhs = prime_set(half_minus);
    c.lhs = CheckValue::pi(lhs);
    c.rhs = CheckValue::pi(rhs);
    if (subset(lhs, rhs)) {
      c.verdict = Verdict::discrepancy;
      c.fatal = true;
      c.detail = "containment unexpectedly holds";
    } else {
      c.verdict = Verdict::fails_as_paper_claims;
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<CheckResult> scan_alternating(unsigned p_max) {
  using namespace cv_detail;
  if (p_max < 5) throw std::domain_error("scan_alternating: p_max >= 5");
  std::vector<CheckResult> out;
  auto factorial_fact = [](unsigned n) {
    Factorization f;
    for (unsigned k = 2; k <= n; ++k) f *= factorize(k);
    return f;
  };
  for (std::uint32_t p : small_primes()) {
    if (p < 5) continue;
    if (p > p_max) break;
    CheckResult c;
    c.check_id = "alternating-two-component";
    c.anchor = "sec3-alternating";
    c.instance = "p=" + std::to_string(p);
    std::set<Nat> lhs = factorial_fact(p - 1).prime_set();
    std::set<Nat> rhs = prime_set(Nat(p) - 1);
    c.lhs = CheckValue::pi(lhs);
    c.rhs = CheckValue::pi(rhs);
    if (lhs == rhs) {
      c.verdict = Verdict::discrepancy;
      c.fatal = true;
    } else {
      c.verdict = Verdict::fails_as_paper_claims;
    }
    out.push_back(std::move(c));

    bool p2prime = is_prime(Nat(p) - 2);
    if (p2prime) {
      CheckResult c3;
      c3.check_id = "alternating-three-component";
      c3.anchor = "sec3-alternating";
      c3.instance = "p=" + std::to_string(p) + " (p-2 prime)";
      Factorization f = factorial_fact(p);
      f.divide_exact(factorize(2));
      f.divide_exact(factorize(Nat(p) - 2));
      f.divide_exact(factorize(Nat(p) - 3));
      std::set<Nat> l3 = f.prime_set();
      std::set<Nat> r3 = prime_set(Nat(p) - 3);
      c3.lhs = CheckValue::pi(l3);
      c3.rhs = CheckValue::pi(r3);
      if (subset(l3, r3)) {
        c3.verdict = Verdict::discrepancy;
        c3.fatal = true;
      } else {
        c3.verdict = Verdict::fails_as_paper_claims;
      }
      out.push_back(std::move(c3));
    }
  }
  return out;
}

inline std::vector<CheckResult> scan_power_equations(unsigned r_max) {
  if (r_max < 3) throw std::domain_error("scan_power_equations: r_max >= 3");
  std::vector<CheckResult> out;
  {
    CheckResult b;
    b.check_id = "power-equation-3^r";
    b.anchor = "sec3-power-equations";
    b.instance = "r=2 (boundary: 3^2-1 = 2^3)";
    b.lhs = CheckValue::nat(8);
    b.rhs = CheckValue::nat(8);
    b.verdict = Verdict::exception_confirmed;
    out.push_back(std::move(b));
  }
  for (std::uint32_t r : small_primes()) {
    if (r < 3) continue;
    if (r > r_max) break;
    {
      CheckResult c;
      c.check_id = "power-equation-3^r";
      c.anchor = "sec3-power-equations";
      c.instance = "r=" + std::to_string(r);
      Nat v = nat_pow(3, r) - 1;
      Nat odd = v;
      while (odd % 2 == 0) odd /= 2;
      c.lhs = CheckValue::nat(v);
      c.rhs = CheckValue::nat(odd);
      if (odd == 1) {
        c.verdict = Verdict::discrepancy;
        c.fatal = true;
        c.detail = "3^r - 1 is a power of 2";
      } else {
        c.verdict = Verdict::fails_as_paper_claims;
      }
      out.push_back(std::move(c));
    }
    {
      CheckResult c;
      c.check_id = "power-equation-2^r";
      c.anchor = "sec3-power-equations";
      c.instance = "r=" + std::to_string(r);
      Nat v = nat_pow(2, r) - 1;
      // direct: strip factors r
      Nat m = v;
      while (m % r == 0) m /= r;
      bool is_r_power = (m == 1);
      // Fermat route: 2^r = 2 (mod r), so 2^r - 1 = 1 (mod r)
      bool fermat_excludes = (powmod(2, r, r) == 2 % r) && (v % r == 1);
      c.lhs = CheckValue::nat(v);
      c.rhs = CheckValue::nat(m);
      if (is_r_power || !fermat_excludes) {
        c.verdict = Verdict::discrepancy;
        c.fatal = true;
      } else {
        c.verdict = Verdict::fails_as_paper_claims;
        c.detail = "2^r-1 = 1 mod r";
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 4

struct CorpusGroups {
  std::string data_dir;

  PermutationGroup load(const std::string& file) const {
    GroupFile gf = parse_group_file(data_dir + "/groups/" + file);
    return PermutationGroup(gf.degree, gf.generators);
  }
};

// brute-force pi(|S : N_S(U)|) for a cyclic Sylow U of prime order u
inline std::set<Nat> normalizer_index_primes(const PermutationGroup& g, std::uint64_t u,
                                             Nat* index_out = nullptr) {
  std::optional<std::uint32_t> seed;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (g.order_of(i) == u) {
      seed = i;
      break;
    }
  if (!seed) throw std::logic_error("no element of order " + std::to_string(u));
  Subgroup usub = g.generated_subgroup({*seed});
  Subgroup n = g.normalizer(usub);
  Nat index = Nat(g.order()) / Nat(n.order());
  if (index_out) *index_out = index;
  return prime_set(index);
}

inline std::vector<CheckResult> verify_table4(const TablesData& td,
                                              const CorpusGroups& corpus) {
  using namespace cv_detail;
  std::vector<CheckResult> out;
  for (const SporadicRow& row : td.sporadic) {
    CheckResult c;
    c.check_id = "sporadic-containment";
    c.anchor = "eq-3.4/table-4";
    c.instance = row.name + " |U|=" + row.u.str();
    c.lhs = CheckValue::pi(row.pi_a_over_n);
    c.rhs = CheckValue::pi(row.pi_c);
    if (subset(row.pi_a_over_n, row.pi_c)) {
      c.verdict = Verdict::discrepancy;
      c.fatal = true;
      c.detail = "containment unexpectedly holds";
    } else {
      c.verdict = Verdict::fails_as_paper_claims;
      if (!row.flags.empty()) c.detail = "row flags: " + row.flags;
    }
    out.push_back(std::move(c));
  }
  // brute-force recomputation for the three smallest members
  struct Recheck {
    const char* name;
    const char* file;
    std::uint64_t u;
  };
  for (const Recheck& rc : {Recheck{"M11", "m11.grp", 5}, Recheck{"M11", "m11.grp", 11},
                            Recheck{"M12", "m12.grp", 11}, Recheck{"J2", "j2.grp", 7}}) {
    CheckResult c;
    c.check_id = "sporadic-normalizer-recompute";
    c.anchor = "eq-3.1/table-4";
    c.instance = std::string(rc.name) + " |U|=" + std::to_string(rc.u);
    PermutationGroup g = corpus.load(rc.file);
    Nat index;
    std::set<Nat> computed = normalizer_index_primes(g, rc.u, &index);
    std::set<Nat> tabulated;
    for (const SporadicRow& row : td.sporadic)
      if (row.name == rc.name && row.u == rc.u) tabulated = row.pi_a_over_n;
    c.lhs = CheckValue::pi(computed);
    c.rhs = CheckValue::pi(tabulated);
    c.detail = "|S:N_S(U)| = " + index.str();
    if (computed == tabulated) {
      c.verdict = Verdict::holds_as_paper_claims;
    } else {
      c.verdict = Verdict::discrepancy;
      c.fatal = true;
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// exceptional cases of the final analysis

inline std::vector<CheckResult> check_exceptional_cases(const CorpusGroups& corpus) {
  using namespace cv_detail;
  std::vector<CheckResult> out;

  {
    // 2A2(3): 6048/(3*7) = 288 = 2^5 3^2 and pi(288) not subset pi(3)
    CheckResult c;
    c.check_id = "exceptional-2A2(3)";
    c.anchor = "sec3-exceptional";
    c.instance = "2A_2(3), theta0|N_S(U)/U| = 3, |U| = 7";
    Nat lhs = Nat(6048) / (3 * 7);
    c.lhs = CheckValue::pi(prime_set(lhs));
    c.rhs = CheckValue::pi(prime_set(3));
    bool arithmetic_ok = (lhs == 288) && (lhs == nat_pow(2, 5) * nat_pow(3, 2));
    if (arithmetic_ok && !subset(prime_set(lhs), prime_set(3))) {
      c.verdict = Verdict::fails_as_paper_claims;
      c.detail = "|S|/(3*|U|) = 288";
    } else {
      c.verdict = Verdict::discrepancy;
      c.fatal = true;
    }
    out.push_back(std::move(c));
  }
  {
    // 2A3(2): 25920/(24*5) = 216 = 2^3 3^3 and pi(216) not subset pi(8)
    CheckResult c;
    c.check_id = "exceptional-2A3(2)";
    c.anchor = "sec3-exceptional";
    c.instance = "2A_3(2), |W| = 24, |U| = 5";
    Nat lhs = Nat(25920) / (24 * 5);
    c.lhs = CheckValue::pi(prime_set(lhs));
    c.rhs = CheckValue::pi(prime_set(8));
    bool arithmetic_ok = (lhs == 216) && (lhs == nat_pow(2, 3) * nat_pow(3, 3));
    if (arithmetic_ok && !subset(prime_set(lhs), prime_set(8))) {
      c.verdict = Verdict::fails_as_paper_claims;
      c.detail = "|S|/(|W||U|) = 216";
    } else {
      c.verdict = Verdict::discrepancy;
      c.fatal = true;
    }
    out.push_back(std::move(c));
  }

  // A2(3): count elements of order 13 in L3(3) and Aut(L3(3)) by enumeration
  PermutationGroup l33 = corpus.load("l3_3.grp");
  PermutationGroup aut = corpus.load("aut_l3_3.grp");
  std::uint64_t c13_l33 = 0, c13_aut = 0;
  {
    auto h = l33.order_histogram();
    if (h.count(13)) c13_l33 = h.at(13);
    auto ha = aut.order_histogram();
    if (ha.count(13)) c13_aut = ha.at(13);
  }
  {
    CheckResult c;
    c.check_id = "exceptional-A2(3)-order13-count";
    c.anchor = "sec3-exceptional";
    c.instance = "elements of order 13 in A_2(3)";
    c.lhs = CheckValue::nat(c13_l33);
    c.rhs = CheckValue::nat(nat_pow(2, 6) * nat_pow(3, 3));
    Nat index;
    std::set<Nat> pi_idx = normalizer_index_primes(l33, 13, &index);
    bool ok = (Nat(c13_l33) == nat_pow(2, 6) * nat_pow(3, 3)) &&
              (Nat(c13_l33) == index * euler_phi(Nat(13))) &&
              (Nat(l33.order()) / index == 39);
    c.detail = "|S:N_S(U)| = " + index.str() + ", |N_S(U)| = 39";
    c.verdict = ok ? Verdict::holds_as_paper_claims : Verdict::discrepancy;
    c.fatal = !ok;
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.check_id = "exceptional-A2(3)-order13-lift";
    c.anchor = "thm2.2-order-lifting";
    c.instance = "elements of order 13 in Aut(A_2(3)) vs A_2(3)";
    c.lhs = CheckValue::nat(c13_aut);
    c.rhs = CheckValue::nat(c13_l33);
    c.verdict = (c13_aut == c13_l33) ? Verdict::holds_as_paper_claims : Verdict::discrepancy;
    c.fatal = (c13_aut != c13_l33);
    out.push_back(std::move(c));
  }
  {
    // printed E-side count 2^5 3^3 |N| vs phi(13)|A| with |A| = 2^4 3^2 |N|
    CheckResult c;
    c.check_id = "exceptional-A2(3)-printed-count";
    c.anchor = "sec3-exceptional";
    c.instance = "phi(13)*|A| with |A| = 2^4 3^2: printed 2^5 3^3";
    Nat computed = euler_phi(Nat(13)) * nat_pow(2, 4) * nat_pow(3, 2);
    Nat printed = nat_pow(2, 5) * nat_pow(3, 3);
    c.lhs = CheckValue::nat(computed);
    c.rhs = CheckValue::nat(printed);
    c.verdict = (computed == printed) ? Verdict::holds_as_paper_claims : Verdict::discrepancy;
    c.fatal = false;  // surfaced, not adjudicated
    c.detail = "computed phi(13)|A|/|N| = " + computed.str() + " = 2^6 3^3";
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// the Lie-table sweep with its aggregate survivor check

inline std::vector<CheckResult> verify_tables(const TablesData& td, const Bounds& b,
                                              unsigned table = 0) {
  std::vector<CheckResult> out;
  std::vector<std::string> survivors;
  for (const LieRow& row : td.rows) {
    if (table != 0 && row.table != table) continue;
    auto instances = instantiate_row(row, b);
    if (instances.empty()) {
      CheckResult c;
      c.check_id = "lie-row-not-exercised";
      c.anchor = "table-" + std::to_string(row.table);
      c.instance = row.label + " [" + row.rid + "]";
      c.verdict = Verdict::exception_confirmed;
      c.detail = "no parameters within bounds satisfy: " + row.condition;
      out.push_back(std::move(c));
      continue;
    }
    for (const LieInstance& inst : instances) {
      out.push_back(check_eq35(inst));
      if (auto e36 = check_eq36(inst)) {
        if (e36->verdict == Verdict::holds_as_paper_claims)
          survivors.push_back(cv_detail::instance_label(inst));
        out.push_back(std::move(*e36));
      }
    }
  }
  if (table == 0 || table == 1) {
    CheckResult agg;
    agg.check_id = "lie-u-prime-equality-survivors";
    agg.anchor = "sec3-conclusion";
    std::string inst;
    for (const auto& s : survivors) inst += (inst.empty() ? "" : "; ") + s;
    agg.instance = inst;
    // the analysis names A2(3), 2A2(3), 2A3(2); the sweep also finds 2A4(2)
    bool named3 = false, extra_u52 = false, other = false;
    unsigned named_count = 0;
    for (const auto& s : survivors) {
      if (s.find("A_{p-1}(q) p=3,q=3") != std::string::npos ||
          s.find("2A_{p-1}(q) p=3,q=3") != std::string::npos ||
          s.find("2A_3(2)") != std::string::npos)
        ++named_count;
      else if (s.find("2A_{p-1}(q) p=5,q=2") != std::string::npos)
        extra_u52 = true;
      else
        other = true;
    }
    named3 = (named_count == 3);
    if (named3 && !extra_u52 && !other && survivors.size() == 3) {
      agg.verdict = Verdict::holds_as_paper_claims;
    } else if (named3 && extra_u52 && !other && survivors.size() == 4) {
      agg.verdict = Verdict::discrepancy;
      agg.fatal = false;
      agg.detail =
          "2A_4(2) = U5(2) also satisfies the equality (|U|=11, "
          "pi(|S|/|U|) = {2,3,5} = pi(5!)); the tabulated conclusion names "
          "only A_2(3), 2A_2(3), 2A_3(2)";
    } else {
      agg.verdict = Verdict::discrepancy;
      agg.fatal = true;
      agg.detail = "unexpected survivor set";
    }
    out.push_back(std::move(agg));
  }
  return out;
}

inline bool subset_u64(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  for (auto x : a)
    if (!b.count(x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// corpus property suite

inline std::vector<CheckResult> verify_corpus(const TablesData& td, const CorpusGroups& cg) {
  using namespace cv_detail;
  std::vector<CheckResult> out;
  auto entries = load_corpus(cg.data_dir);
  for (const CorpusEntry& e : entries) {
    PermutationGroup g = cg.load(e.file);
    {
      CheckResult c;
      c.check_id = "corpus-order";
      c.anchor = "corpus";
      c.instance = e.label;
      c.lhs = CheckValue::nat(g.order());
      c.rhs = CheckValue::nat(e.expected_order);
      c.verdict = (Nat(g.order()) == e.expected_order) ? Verdict::holds_as_paper_claims
                                                       : Verdict::discrepancy;
      c.fatal = (Nat(g.order()) != e.expected_order);
      out.push_back(std::move(c));
      if (out.back().fatal) continue;
    }
    {
      CheckResult c;
      c.check_id = "corpus-order-equation";
      c.anchor = "sec2-order-equation";
      c.instance = e.label;
      OrderEquation eq = order_equation(g);
      Nat sum = 0;
      bool rows_ok = true;
      for (const auto& [n, row] : eq.rows) {
        sum += row.count;
        if (row.count != row.v * euler_phi(Nat(n))) rows_ok = false;
      }
      bool ok = rows_ok && (sum == eq.group_order) && (eq.group_order == Nat(g.order()));
      c.lhs = CheckValue::nat(sum);
      c.rhs = CheckValue::nat(g.order());
      c.verdict = ok ? Verdict::holds_as_paper_claims : Verdict::discrepancy;
      c.fatal = !ok;
      out.push_back(std::move(c));
    }
    PrimeGraph pg = build_gk(g.spectrum_set());
    if (is_disconnected(pg)) {
      CheckResult c;
      c.check_id = "corpus-trichotomy";
      c.anchor = "thm2.1";
      c.instance = e.label;
      TrichotomyResult t = gk_trichotomy(g);
      c.detail = trichotomy_name(t.kind);
      c.verdict = (t.kind != Trichotomy::unclassifiable) ? Verdict::holds_as_paper_claims
                                                         : Verdict::discrepancy;
      c.fatal = (t.kind == Trichotomy::unclassifiable);
      if (t.kind == Trichotomy::frobenius) {
        FrobeniusLemmaReport fr = check_frobenius_lemma(g, *t.frob);
        bool lemma_ok = fr.kernel_nilpotent && fr.kernel_abelian_when_h_even &&
                        fr.complement_odd_sylows_cyclic &&
                        fr.complement_2sylow_cyclic_or_quaternion &&
                        fr.nonsolvable_complement_consistent;
        c.detail += lemma_ok ? "; kernel/complement structure checks pass"
                             : "; structure check FAILED";
        if (!lemma_ok) {
          c.verdict = Verdict::discrepancy;
          c.fatal = true;
        }
        if (!fr.kernel_noncyclic_odd_sylow_primes.empty()) {
          c.detail += "; kernel-side odd Sylow not cyclic at p=";
          for (auto p : fr.kernel_noncyclic_odd_sylow_primes)
            c.detail += std::to_string(p) + " ";
          c.detail += "(reported, not asserted)";
        }
      } else if (t.kind == Trichotomy::two_frobenius) {
        TwoFrobeniusLemmaReport tr = check_2frobenius_lemma(g, *t.frob2);
        bool lemma_ok = tr.s_is_2 && tr.pi1_is_piA_union_piC && tr.pi2_is_piB &&
                        tr.solvable && tr.b_odd && tr.b_cyclic_subgroup_exists && tr.c_cyclic;
        c.detail += lemma_ok ? "; ABC structure checks pass" : "; ABC structure check FAILED";
        if (!lemma_ok) {
          c.verdict = Verdict::discrepancy;
          c.fatal = true;
        }
      }
      out.push_back(std::move(c));
    }
    {
      // order-lifting instances over every proper normal subgroup
      for (const Subgroup& n : g.normal_subgroups()) {
        if (n.order() == g.order() || n.order() == 1) continue;
        for (std::uint64_t m : g.spectrum_set()) {
          if (m <= 1) continue;
          if (std::gcd<std::uint64_t, std::uint64_t>(m, n.order()) != 1) continue;
          std::set<std::uint64_t> pim = u64_prime_set(m);
          bool nonprincipal = false;
          for (std::size_t i = 1; i < pg.components.size(); ++i)
            if (subset_u64(pim, pg.components[i])) nonprincipal = true;
          if (!nonprincipal) continue;
          OrderLiftReport lr = check_order_lifting(g, n, m, true);
          CheckResult c;
          c.check_id = "corpus-order-lifting";
          c.anchor = "thm2.2-order-lifting";
          c.instance = e.label + " N=" + std::to_string(n.order()) + " m=" + std::to_string(m);
          c.lhs = CheckValue::nat(lr.count_in_group);
          c.rhs = CheckValue::nat(lr.count_in_quotient * lr.normal_order);
          bool ok = lr.count_identity && lr.coset_orders_lift;
          c.verdict = ok ? Verdict::holds_as_paper_claims : Verdict::discrepancy;
          c.fatal = !ok;
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// the full report

inline VerificationReport full_report(const TablesData& td, const CorpusGroups& cg,
                                      const Bounds& b) {
  VerificationReport rep;
  rep.bounds = b;
  auto append = [&rep](std::vector<CheckResult> v) {
    for (auto& c : v) rep.checks.push_back(std::move(c));
  };
  append(verify_tables(td, b));
  append(verify_table4(td, cg));
  append(scan_l2r(199));
  append(scan_alternating(97));
  append(scan_power_equations(61));
  append(check_exceptional_cases(cg));
  append(verify_corpus(td, cg));
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::ordered_json check_value_json(const CheckValue& v) {
  if (v.is_set) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Nat& p : v.primes) {
      if (p <= Nat(INT64_MAX))
        arr.push_back(p.convert_to<std::int64_t>());
      else
        arr.push_back(p.str());
    }
    return arr;
  }
  if (v.number <= Nat(INT64_MAX)) return nlohmann::ordered_json(v.number.convert_to<std::int64_t>());
  return nlohmann::ordered_json(v.number.str());
}

inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["version"] = rep.version;
  j["bounds"] = {{"qmax", rep.bounds.qmax}, {"pmax", rep.bounds.pmax}, {"nmax", rep.bounds.nmax}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["check_id"] = c.check_id;
    jc["paper_anchor"] = c.anchor;
    jc["instance"] = c.instance;
    jc["computed_lhs"] = check_value_json(c.lhs);
    jc["computed_rhs"] = check_value_json(c.rhs);
    jc["verdict"] = verdict_name(c.verdict);
    jc["fatal"] = c.fatal;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json sum;
  for (const auto& [k, v] : rep.summary()) sum[k] = v;
  j["summary"] = std::move(sum);
  return j;
}

inline std::string report_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "verification report v" << rep.version << " (qmax=" << rep.bounds.qmax
     << ", pmax=" << rep.bounds.pmax << ", nmax=" << rep.bounds.nmax << ")\n";
  for (const CheckResult& c : rep.checks) {
    os << "[" << verdict_name(c.verdict) << (c.fatal ? "!" : "") << "] " << c.check_id << " "
       << c.instance;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  os << "summary:";
  for (const auto& [k, v] : rep.summary()) os << " " << k << "=" << v;
  os << "\n";
  return os.str();
}

}  // namespace gkv
