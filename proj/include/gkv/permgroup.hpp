#pragma once

// Bounded brute-force permutation group engine. Groups are materialized by
// breadth-first closure over the generators into a flat element arena; all
// higher operations (classes, normal lattice, quotients, series) work on
// 32-bit element ids against that arena.

#include "gkv/arith.hpp"
#include "gkv/permutation.hpp"

#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkv {

class GroupTooLargeError : public std::runtime_error {
 public:
  explicit GroupTooLargeError(std::uint64_t cap)
      : std::runtime_error("group too large: enumeration exceeded the cap of " +
                           std::to_string(cap) + " elements") {}
};

class PermutationGroup;

// Subgroup of an enumerated group: sorted member ids + membership bits.
struct Subgroup {
  std::vector<std::uint32_t> members;
  std::vector<bool> bits;
  std::vector<std::uint32_t> gens;  // some generating set (ids), possibly empty for trivial

  std::uint64_t order() const { return members.size(); }
  bool contains(std::uint32_t id) const { return bits[id]; }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

class PermutationGroup {
 public:
  static constexpr std::uint64_t kDefaultCap = 2'000'000;

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::uint64_t size_cap = kDefaultCap)
      : degree_(degree), gens_(std::move(generators)), cap_(size_cap) {
    if (degree_ < 1 || degree_ > 65535)
      throw std::invalid_argument("degree must be in 1..65535");
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t size_cap() const { return cap_; }

  // full element set by BFS closure; deterministic ordering (identity first)
  void enumerate() const {
    if (!arena_.empty()) return;
    arena_.reserve(1024 * degree_);
    table_init(1 << 12);
    append_identity();
    std::vector<Point> scratch(degree_);
    for (std::uint32_t i = 0; i < count_; ++i) {
      for (const auto& g : gens_) {
        const Point* e = row(i);
        const auto& gi = g.images();
        for (std::size_t x = 0; x < degree_; ++x) scratch[x] = gi[e[x]];
        if (find(scratch.data()) == kNoId) {
          if (count_ >= cap_) throw GroupTooLargeError(cap_);
          append(scratch.data());
        }
      }
    }
  }

  std::uint64_t order() const {
    enumerate();
    return count_;
  }

  Permutation element(std::uint32_t id) const {
    enumerate();
    const Point* r = row(id);
    return Permutation(std::vector<Point>(r, r + degree_));
  }

  std::optional<std::uint32_t> index_of(const Permutation& p) const {
    enumerate();
    if (p.degree() != degree_) return std::nullopt;
    std::uint32_t id = find(p.images().data());
    return id == kNoId ? std::nullopt : std::make_optional(id);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<Point> scratch(degree_);
    const Point* ea = row(a);
    const Point* eb = row(b);
    for (std::size_t x = 0; x < degree_; ++x) scratch[x] = eb[ea[x]];
    std::uint32_t id = find(scratch.data());
    if (id == kNoId) throw std::logic_error("product escaped enumerated set");
    return id;
  }

  std::uint32_t inv(std::uint32_t a) const {
    std::vector<Point> scratch(degree_);
    const Point* e = row(a);
    for (std::size_t x = 0; x < degree_; ++x) scratch[e[x]] = Point(x);
    std::uint32_t id = find(scratch.data());
    if (id == kNoId) throw std::logic_error("inverse escaped enumerated set");
    return id;
  }

  // b^-1 a b
  std::uint32_t conj(std::uint32_t a, std::uint32_t b) const {
    std::vector<Point> binv(degree_), scratch(degree_);
    const Point* eb = row(b);
    for (std::size_t x = 0; x < degree_; ++x) binv[eb[x]] = Point(x);
    const Point* ea = row(a);
    for (std::size_t x = 0; x < degree_; ++x) scratch[x] = eb[ea[binv[x]]];
    std::uint32_t id = find(scratch.data());
    if (id == kNoId) throw std::logic_error("conjugate escaped enumerated set");
    return id;
  }

  std::uint64_t order_of(std::uint32_t id) const {
    ensure_orders();
    return orders_[id];
  }

  // n -> |M_G(n)|
  const std::map<std::uint64_t, std::uint64_t>& order_histogram() const {
    ensure_orders();
    return histogram_;
  }

  std::set<std::uint64_t> spectrum_set() const {
    std::set<std::uint64_t> out;
    for (const auto& [n, c] : order_histogram()) out.insert(n);
    return out;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& [n, c] : order_histogram()) e = std::lcm(e, n);
    return e;
  }

  // |G(d)| = #{x : x^d = 1}
  std::uint64_t count_order_dividing(std::uint64_t d) const {
    if (d < 1) throw std::domain_error("count_order_dividing: d >= 1");
    std::uint64_t c = 0;
    for (const auto& [n, cnt] : order_histogram())
      if (d % n == 0) c += cnt;
    return c;
  }

  // ---- conjugacy classes ----

  std::uint32_t num_classes() const {
    ensure_classes();
    return static_cast<std::uint32_t>(class_members_.size());
  }
  std::uint32_t class_of(std::uint32_t id) const {
    ensure_classes();
    return class_of_[id];
  }
  const std::vector<std::uint32_t>& class_members(std::uint32_t c) const {
    ensure_classes();
    return class_members_[c];
  }
  std::uint32_t class_rep(std::uint32_t c) const { return class_members(c)[0]; }

  // ---- subgroups ----

  Subgroup trivial_subgroup() const {
    enumerate();
    Subgroup s;
    s.members = {0};
    s.bits.assign(count_, false);
    s.bits[0] = true;
    return s;
  }

  Subgroup full_subgroup() const {
    enumerate();
    Subgroup s;
    s.members.resize(count_);
    for (std::uint32_t i = 0; i < count_; ++i) s.members[i] = i;
    s.bits.assign(count_, true);
    for (const auto& g : gens_) s.gens.push_back(*index_of(g));
    return s;
  }

  // <gens>; if the closure passes |G|/2 it must be G (Lagrange) and the full
  // subgroup is returned without finishing the walk
  Subgroup generated_subgroup(const std::vector<std::uint32_t>& gen_ids) const {
    enumerate();
    Subgroup s;
    s.bits.assign(count_, false);
    s.gens = gen_ids;
    std::vector<std::uint32_t> q;
    s.bits[0] = true;
    q.push_back(0);
    for (std::size_t head = 0; head < q.size(); ++head) {
      for (std::uint32_t g : gen_ids) {
        std::uint32_t y = mul(q[head], g);
        if (!s.bits[y]) {
          s.bits[y] = true;
          q.push_back(y);
          if (q.size() * 2 > count_) {
            Subgroup full = full_subgroup();
            full.gens = gen_ids.empty() ? full.gens : gen_ids;
            return full;
          }
        }
      }
    }
    std::sort(q.begin(), q.end());
    s.members = std::move(q);
    return s;
  }

  // normal closure of <seed> under the whole group
  Subgroup normal_closure(std::vector<std::uint32_t> seed) const {
    enumerate();
    std::vector<std::uint32_t> gen_ids;
    for (const auto& g : gens_) gen_ids.push_back(*index_of(g));
    std::vector<std::uint32_t> t = std::move(seed);
    while (true) {
      Subgroup h = generated_subgroup(t);
      if (h.order() == count_) return h;
      bool grew = false;
      for (std::uint32_t g : gen_ids) {
        for (std::size_t k = 0, n = t.size(); k < n; ++k) {
          std::uint32_t c = conj(t[k], g);
          if (!h.contains(c)) {
            t.push_back(c);
            grew = true;
            break;
          }
        }
        if (grew) break;
      }
      if (!grew) return h;
    }
  }

  // {x in G : xg = gx}
  Subgroup centralizer(std::uint32_t gid) const {
    enumerate();
    Subgroup s;
    s.bits.assign(count_, false);
    const Point* eg = row(gid);
    std::vector<Point> a(degree_), b(degree_);
    for (std::uint32_t x = 0; x < count_; ++x) {
      const Point* ex = row(x);
      bool eq = true;
      for (std::size_t i = 0; i < degree_ && eq; ++i)
        if (eg[ex[i]] != ex[eg[i]]) eq = false;
      if (eq) {
        s.bits[x] = true;
        s.members.push_back(x);
      }
    }
    s.gens = s.members;  // callers that care can shrink this
    return s;
  }

  Subgroup centralizer(const Permutation& g) const {
    auto id = index_of(g);
    if (!id) throw std::invalid_argument("centralizer: element not in group");
    return centralizer(*id);
  }

  // {g : U^g = U}
  Subgroup normalizer(const Subgroup& u) const {
    enumerate();
    std::vector<std::uint32_t> ugens = u.gens.empty() ? u.members : u.gens;
    Subgroup s;
    s.bits.assign(count_, false);
    for (std::uint32_t g = 0; g < count_; ++g) {
      bool ok = true;
      for (std::uint32_t t : ugens) {
        if (!u.contains(conj(t, g))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        s.bits[g] = true;
        s.members.push_back(g);
      }
    }
    s.gens = s.members;
    return s;
  }

  // witness: (group element id, subgroup member id) whose conjugate escapes
  std::optional<std::pair<std::uint32_t, std::uint32_t>> normality_witness(
      const Subgroup& n) const {
    enumerate();
    for (const auto& g : gens_) {
      std::uint32_t gid = *index_of(g);
      for (std::uint32_t m : n.members) {
        if (!n.contains(conj(m, gid))) return std::make_pair(gid, m);
      }
    }
    return std::nullopt;
  }

  bool is_normal(const Subgroup& n) const { return !normality_witness(n).has_value(); }

  // all normal subgroups: the lattice generated by normal closures of
  // conjugacy classes (unions of classes closed under join), sorted by order
  std::vector<Subgroup> normal_subgroups() const {
    ensure_classes();
    std::uint32_t nc = num_classes();
    std::set<std::vector<std::uint32_t>> seen;  // class-id sets
    std::vector<std::vector<std::uint32_t>> lattice;
    auto add = [&](std::vector<std::uint32_t> cls) {
      std::sort(cls.begin(), cls.end());
      if (seen.insert(cls).second) lattice.push_back(std::move(cls));
    };
    add({class_of(0)});
    for (std::uint32_t c = 0; c < nc; ++c) add(class_union_closure({c}));
    // close under join
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<std::uint32_t> u = lattice[i];
        u.insert(u.end(), lattice[j].begin(), lattice[j].end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        if (seen.count(u)) continue;
        add(class_union_closure(u));
      }
    }
    std::vector<Subgroup> out;
    for (const auto& cls : lattice) out.push_back(subgroup_from_classes(cls));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.members < b.members;
    });
    return out;
  }

  // derived subgroup of a subgroup (normal closure, inside h, of the
  // commutators of h's generators)
  Subgroup derived_subgroup_of(const Subgroup& h) const {
    enumerate();
    std::vector<std::uint32_t> hg = h.gens.empty() ? h.members : h.gens;
    std::vector<std::uint32_t> t;
    std::set<std::uint32_t> tset;
    for (std::uint32_t a : hg)
      for (std::uint32_t b : hg) {
        std::uint32_t c = mul(mul(inv(a), inv(b)), mul(a, b));
        if (c != 0 && tset.insert(c).second) t.push_back(c);
      }
    if (t.empty()) return trivial_subgroup();
    while (true) {
      Subgroup d = generated_subgroup(t);
      bool grew = false;
      for (std::uint32_t g : hg) {
        for (std::size_t k = 0, n = t.size(); k < n; ++k) {
          std::uint32_t c = conj(t[k], g);
          if (!d.contains(c)) {
            t.push_back(c);
            grew = true;
            break;
          }
        }
        if (grew) break;
      }
      if (!grew) {
        // keep a small generating set for the next derived step
        d.gens = t;
        return d;
      }
    }
  }

  Subgroup derived_subgroup() const { return derived_subgroup_of(full_subgroup()); }

  // derived series orders, until 1 or stabilization
  std::vector<std::uint64_t> derived_series_orders() const {
    std::vector<std::uint64_t> orders;
    Subgroup h = full_subgroup();
    orders.push_back(h.order());
    while (h.order() > 1) {
      Subgroup d = derived_subgroup_of(h);
      if (d.order() == h.order()) break;
      orders.push_back(d.order());
      h = std::move(d);
    }
    return orders;
  }

  bool is_solvable() const {
    auto s = derived_series_orders();
    return s.back() == 1;
  }

  // true iff for every p | |G| the number of p-power-order elements is |G|_p
  bool is_nilpotent() const {
    Nat n = order();
    for (const Nat& p : prime_set(n)) {
      Nat ppart = r_part(n, p);
      std::uint64_t c = 0;
      for (const auto& [o, cnt] : order_histogram()) {
        std::uint64_t m = o;
        while (m % to_u64(p) == 0) m /= to_u64(p);
        if (m == 1) c += cnt;
      }
      if (Nat(c) != ppart) return false;
    }
    return true;
  }

  // Sylow p-subgroup by normalizer growth (intended for small groups)
  Subgroup sylow(std::uint64_t p) const {
    enumerate();
    Nat ppart = r_part(Nat(count_), Nat(p));
    std::uint64_t target = to_u64(ppart);
    std::optional<std::uint32_t> seed;
    for (std::uint32_t i = 0; i < count_; ++i) {
      std::uint64_t o = order_of(i);
      bool is_p_el = true;
      while (o % p == 0) o /= p;
      is_p_el = (o == 1) && order_of(i) > 1;
      if (is_p_el) {
        seed = i;
        break;
      }
    }
    if (!seed) {
      if (target == 1) return trivial_subgroup();
      throw std::logic_error("sylow: no p-element found");
    }
    std::vector<std::uint32_t> t = {*seed};
    Subgroup s = generated_subgroup(t);
    while (s.order() < target) {
      Subgroup nrm = normalizer(s);
      bool grown = false;
      for (std::uint32_t x : nrm.members) {
        if (s.contains(x)) continue;
        std::uint64_t o = order_of(x);
        while (o % p == 0) o /= p;
        if (o != 1) continue;
        t.push_back(x);
        Subgroup s2 = generated_subgroup(t);
        std::uint64_t so = s2.order();
        bool ppower = true;
        while (so % p == 0) so /= p;
        if (so != 1) {
          t.pop_back();
          continue;
        }
        s = std::move(s2);
        grown = true;
        break;
      }
      if (!grown) throw std::logic_error("sylow: stuck before reaching full p-part");
    }
    s.gens = t;
    return s;
  }

 private:
  friend class QuotientGroup;

  static constexpr std::uint32_t kNoId = UINT32_MAX;

  const Point* row(std::uint32_t id) const { return arena_.data() + std::size_t(id) * degree_; }

  static std::uint64_t hash_bytes(const Point* p, std::size_t n) {
    const unsigned char* b = reinterpret_cast<const unsigned char*>(p);
    std::size_t len = n * sizeof(Point);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
    return h;
  }

  void table_init(std::size_t cap) const {
    table_ids_.assign(cap, kNoId);
    table_mask_ = cap - 1;
  }

  void table_grow() const {
    std::size_t ncap = (table_mask_ + 1) * 2;
    table_ids_.assign(ncap, kNoId);
    table_mask_ = ncap - 1;
    for (std::uint32_t i = 0; i < count_; ++i) table_insert_raw(i);
  }

  void table_insert_raw(std::uint32_t id) const {
    std::uint64_t h = hash_bytes(row(id), degree_);
    std::size_t pos = h & table_mask_;
    while (table_ids_[pos] != kNoId) pos = (pos + 1) & table_mask_;
    table_ids_[pos] = id;
  }

  std::uint32_t find(const Point* p) const {
    std::uint64_t h = hash_bytes(p, degree_);
    std::size_t pos = h & table_mask_;
    while (true) {
      std::uint32_t id = table_ids_[pos];
      if (id == kNoId) return kNoId;
      if (std::memcmp(row(id), p, degree_ * sizeof(Point)) == 0) return id;
      pos = (pos + 1) & table_mask_;
    }
  }

  void append_identity() const {
    std::vector<Point> e(degree_);
    for (std::size_t i = 0; i < degree_; ++i) e[i] = Point(i);
    append(e.data());
  }

  void append(const Point* p) const {
    arena_.insert(arena_.end(), p, p + degree_);
    std::uint32_t id = count_++;
    if ((count_ * 10) / 7 >= table_mask_) table_grow();
    table_insert_raw(id);
  }

  void ensure_orders() const {
    enumerate();
    if (!orders_.empty()) return;
    orders_.resize(count_);
    std::vector<bool> seen(degree_);
    for (std::uint32_t i = 0; i < count_; ++i) {
      std::fill(seen.begin(), seen.end(), false);
      const Point* e = row(i);
      std::uint64_t ord = 1;
      for (std::size_t s = 0; s < degree_; ++s) {
        if (seen[s]) continue;
        std::uint64_t len = 0;
        std::size_t j = s;
        while (!seen[j]) {
          seen[j] = true;
          j = e[j];
          ++len;
        }
        ord = std::lcm(ord, len);
      }
      orders_[i] = ord;
      histogram_[ord] += 1;
    }
  }

  void ensure_classes() const {
    enumerate();
    if (!class_of_.empty()) return;
    class_of_.assign(count_, kNoId);
    std::vector<std::uint32_t> gen_ids;
    for (const auto& g : gens_) gen_ids.push_back(*index_of(g));
    for (std::uint32_t i = 0; i < count_; ++i) {
      if (class_of_[i] != kNoId) continue;
      std::uint32_t cid = static_cast<std::uint32_t>(class_members_.size());
      class_members_.push_back({});
      std::vector<std::uint32_t>& mem = class_members_.back();
      class_of_[i] = cid;
      mem.push_back(i);
      for (std::size_t head = 0; head < mem.size(); ++head) {
        for (std::uint32_t g : gen_ids) {
          std::uint32_t y = conj(mem[head], g);
          if (class_of_[y] == kNoId) {
            class_of_[y] = cid;
            mem.push_back(y);
          }
        }
      }
      std::sort(mem.begin(), mem.end());
    }
  }

  // subgroup closure in class space: grow a union of classes until it is
  // multiplication-closed (rep(C) * U subset U suffices for class unions);
  // passing |G|/2 short-circuits to the full group
  std::vector<std::uint32_t> class_union_closure(std::vector<std::uint32_t> seed) const {
    ensure_classes();
    std::uint32_t nc = num_classes();
    std::vector<bool> in(nc, false);
    std::vector<std::uint32_t> cls;
    auto push = [&](std::uint32_t c) {
      if (!in[c]) {
        in[c] = true;
        cls.push_back(c);
      }
    };
    push(class_of(0));
    for (std::uint32_t c : seed) push(c);
    while (true) {
      std::uint64_t total = 0;
      for (std::uint32_t c : cls) total += class_members_[c].size();
      if (total * 2 > count_) {
        std::vector<std::uint32_t> all(nc);
        for (std::uint32_t c = 0; c < nc; ++c) all[c] = c;
        return all;
      }
      bool grew = false;
      for (std::size_t ci = 0; ci < cls.size() && !grew; ++ci) {
        std::uint32_t r = class_rep(cls[ci]);
        for (std::size_t cj = 0; cj < cls.size() && !grew; ++cj) {
          for (std::uint32_t u : class_members_[cls[cj]]) {
            std::uint32_t p = mul(r, u);
            if (!in[class_of_[p]]) {
              push(class_of_[p]);
              grew = true;
              break;
            }
          }
        }
      }
      if (!grew) {
        std::sort(cls.begin(), cls.end());
        return cls;
      }
    }
  }

  Subgroup subgroup_from_classes(const std::vector<std::uint32_t>& cls) const {
    if (cls.size() == class_members_.size()) return full_subgroup();
    Subgroup s;
    s.bits.assign(count_, false);
    for (std::uint32_t c : cls)
      for (std::uint32_t m : class_members_[c]) {
        s.bits[m] = true;
        s.members.push_back(m);
      }
    std::sort(s.members.begin(), s.members.end());
    // greedy small generating set
    std::vector<std::uint32_t> t;
    Subgroup h;
    h.bits.assign(count_, false);
    h.bits[0] = true;
    std::uint64_t hsize = 1;
    for (std::uint32_t m : s.members) {
      if (h.bits[m]) continue;
      t.push_back(m);
      h.bits.assign(count_, false);
      std::vector<std::uint32_t> q = {0};
      h.bits[0] = true;
      for (std::size_t head = 0; head < q.size(); ++head)
        for (std::uint32_t g : t) {
          std::uint32_t y = mul(q[head], g);
          if (!h.bits[y]) {
            h.bits[y] = true;
            q.push_back(y);
          }
        }
      hsize = q.size();
      if (hsize == s.members.size()) break;
    }
    s.gens = t;
    return s;
  }

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::uint64_t cap_;

  mutable std::vector<Point> arena_;
  mutable std::uint32_t count_ = 0;
  mutable std::vector<std::uint32_t> table_ids_;
  mutable std::size_t table_mask_ = 0;
  mutable std::vector<std::uint64_t> orders_;
  mutable std::map<std::uint64_t, std::uint64_t> histogram_;
  mutable std::vector<std::uint32_t> class_of_;
  mutable std::vector<std::vector<std::uint32_t>> class_members_;
};

// restrict a subgroup to its own PermutationGroup (same points)
inline PermutationGroup subgroup_as_group(const PermutationGroup& g, const Subgroup& s) {
  std::vector<Permutation> gens;
  for (std::uint32_t id : (s.gens.empty() ? s.members : s.gens)) gens.push_back(g.element(id));
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
  return PermutationGroup(g.degree(), std::move(gens), g.size_cap());
}

// ---------------------------------------------------------------------------
// quotient groups

// Coset space of a normal subgroup with canonical (lexicographically least)
// representatives; the quotient itself is materialized as the permutation
// group induced on the cosets, which is faithful for G/N.
class QuotientGroup {
 public:
  QuotientGroup(const PermutationGroup& parent, Subgroup n) : parent_(&parent), n_(std::move(n)) {
    parent.enumerate();
    auto w = parent.normality_witness(n_);
    if (w) {
      throw std::invalid_argument(
          "quotient: subgroup is not normal; conjugating member " +
          parent.element(w->second).cycle_string() + " by " +
          parent.element(w->first).cycle_string() + " escapes");
    }
    build();
  }

  std::uint64_t order() const { return coset_rep_.size(); }
  const PermutationGroup& group() const { return *action_; }
  const Subgroup& kernel() const { return n_; }

  std::uint32_t coset_of(std::uint32_t parent_id) const { return coset_of_[parent_id]; }
  std::uint32_t coset_rep(std::uint32_t coset) const { return coset_rep_[coset]; }

  // image of a parent element in the coset action group
  std::uint32_t image_of(std::uint32_t parent_id) const {
    std::vector<Point> img(coset_rep_.size());
    for (std::size_t c = 0; c < coset_rep_.size(); ++c)
      img[c] = Point(coset_of_[parent_->mul(coset_rep_[c], parent_id)]);
    auto id = action_->index_of(Permutation(std::move(img)));
    if (!id) throw std::logic_error("quotient image escaped action group");
    return *id;
  }

  Subgroup image_subgroup(const Subgroup& h) const {
    std::set<std::uint32_t> ids;
    for (std::uint32_t m : (h.gens.empty() ? h.members : h.gens)) ids.insert(image_of(m));
    return action_->generated_subgroup(std::vector<std::uint32_t>(ids.begin(), ids.end()));
  }

 private:
  void build() {
    const PermutationGroup& g = *parent_;
    std::uint32_t n = static_cast<std::uint32_t>(g.order());
    coset_of_.assign(n, UINT32_MAX);
    std::vector<std::uint32_t> reps;  // canonical member id per coset
    for (std::uint32_t e = 0; e < n; ++e) {
      if (coset_of_[e] != UINT32_MAX) continue;
      std::uint32_t cid = static_cast<std::uint32_t>(reps.size());
      std::uint32_t best = UINT32_MAX;
      std::vector<std::uint32_t> mem;
      for (std::uint32_t m : n_.members) {
        std::uint32_t x = g.mul(m, e);  // n * e runs over the coset Ne = eN
        mem.push_back(x);
        if (best == UINT32_MAX ||
            g.element(x).images() < g.element(best).images())
          best = x;
      }
      for (std::uint32_t x : mem) coset_of_[x] = cid;
      reps.push_back(best);
    }
    // sort cosets by canonical representative image arrays
    std::vector<std::uint32_t> perm(reps.size());
    for (std::uint32_t i = 0; i < reps.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.element(reps[a]).images() < g.element(reps[b]).images();
    });
    std::vector<std::uint32_t> rank(reps.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;
    coset_rep_.resize(reps.size());
    for (std::uint32_t i = 0; i < reps.size(); ++i) coset_rep_[rank[i]] = reps[i];
    for (std::uint32_t e = 0; e < n; ++e) coset_of_[e] = rank[coset_of_[e]];

    if (coset_rep_.size() > 65535)
      throw std::invalid_argument("quotient too large for the coset action");
    std::vector<Permutation> qgens;
    for (const auto& gp : g.generators()) {
      std::uint32_t gid = *g.index_of(gp);
      std::vector<Point> img(coset_rep_.size());
      for (std::size_t c = 0; c < coset_rep_.size(); ++c)
        img[c] = Point(coset_of_[g.mul(coset_rep_[c], gid)]);
      qgens.push_back(Permutation(std::move(img)));
    }
    action_.emplace(coset_rep_.size() == 1 ? 1 : coset_rep_.size(), std::move(qgens),
                    g.size_cap());
    action_->enumerate();
    if (action_->order() * n_.order() != g.order())
      throw std::logic_error("quotient: |G/N| * |N| != |G|");
  }

  const PermutationGroup* parent_;
  Subgroup n_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<std::uint32_t> coset_rep_;
  mutable std::optional<PermutationGroup> action_;
};

}  // namespace gkv
