#pragma once

// Order equations: |G| = sum over n in pi_e(G) of v_n(G) phi(n), the
// canonical same-order-type fingerprint.

#include "gkv/arith.hpp"
#include "gkv/permgroup.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gkv {

struct OrderEquationRow {
  Nat count;  // |M_G(n)|
  Nat v;      // cyclic degree v_n(G)
  bool operator==(const OrderEquationRow& o) const { return count == o.count && v == o.v; }
};

struct OrderEquation {
  Nat group_order;
  std::map<std::uint64_t, OrderEquationRow> rows;  // keyed by n in pi_e(G)

  bool operator==(const OrderEquation& o) const {
    return group_order == o.group_order && rows == o.rows;
  }

  std::set<std::uint64_t> spectrum() const {
    std::set<std::uint64_t> s;
    for (const auto& [n, r] : rows) s.insert(n);
    return s;
  }

  // |G(d)| = sum over n | d of |M_G(n)|
  Nat count_order_dividing(std::uint64_t d) const {
    Nat c = 0;
    for (const auto& [n, r] : rows)
      if (d % n == 0) c += r.count;
    return c;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& [n, r] : rows) e = std::lcm(e, n);
    return e;
  }

  std::uint64_t fingerprint() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(to_u64(group_order));
    for (const auto& [n, r] : rows) {
      mix(n);
      mix(to_u64(r.v));
    }
    return h;
  }
};

inline std::set<std::uint64_t> spectrum(const PermutationGroup& g) { return g.spectrum_set(); }

inline OrderEquation order_equation(const PermutationGroup& g) {
  OrderEquation eq;
  eq.group_order = g.order();
  Nat total = 0;
  for (const auto& [n, count] : g.order_histogram()) {
    Nat phi = euler_phi(Nat(n));
    if (Nat(count) % phi != 0)
      throw std::logic_error("order equation: |M_G(n)| not divisible by phi(n)");
    eq.rows[n] = OrderEquationRow{Nat(count), Nat(count) / phi};
    total += count;
  }
  if (total != eq.group_order) throw std::logic_error("order equation rows do not sum to |G|");
  return eq;
}

inline bool same_order_type(const PermutationGroup& a, const PermutationGroup& b) {
  return order_equation(a) == order_equation(b);
}

// maximal elements of the spectrum under divisibility
inline std::set<std::uint64_t> mu_set(const std::set<std::uint64_t>& spec) {
  std::set<std::uint64_t> out;
  for (std::uint64_t a : spec) {
    bool maximal = true;
    for (std::uint64_t b : spec)
      if (b != a && b % a == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.insert(a);
  }
  return out;
}

inline std::set<std::uint64_t> mu_set(const OrderEquation& eq) { return mu_set(eq.spectrum()); }

// ---------------------------------------------------------------------------
// order lifting (counts through a quotient by a coprime normal subgroup)

struct OrderLiftReport {
  bool pre_normal = false;
  bool pre_coprime = false;
  bool pre_nonprincipal = false;  // pi(m) inside a non-principal component
  bool preconditions_met() const { return pre_normal && pre_coprime && pre_nonprincipal; }

  Nat count_in_group;      // |M_G(m)|
  Nat count_in_quotient;   // |M_{G/N}(m)|
  Nat normal_order;        // |N|
  bool coset_orders_lift = false;  // every x of order m has o(xN) = m
  bool count_identity = false;     // |M_G(m)| == |M_{G/N}(m)| * |N|
};

// the prime-graph component test is supplied by the caller (gkgraph owns
// component structure); pass pre_nonprincipal accordingly
inline OrderLiftReport check_order_lifting(const PermutationGroup& g, const Subgroup& n,
                                           std::uint64_t m, bool pi_m_nonprincipal) {
  OrderLiftReport rep;
  rep.pre_normal = g.is_normal(n);
  rep.pre_coprime = std::gcd<std::uint64_t, std::uint64_t>(m, n.order()) == 1;
  rep.pre_nonprincipal = pi_m_nonprincipal;
  rep.normal_order = n.order();

  std::uint64_t cg = 0;
  const auto& hist = g.order_histogram();
  auto it = hist.find(m);
  if (it != hist.end()) cg = it->second;
  rep.count_in_group = cg;

  if (n.order() == 1) {
    rep.count_in_quotient = cg;
    rep.coset_orders_lift = true;
    rep.count_identity = true;
    return rep;
  }
  if (!rep.pre_normal) return rep;

  QuotientGroup q(g, n);
  std::uint64_t cq = 0;
  const auto& qh = q.group().order_histogram();
  auto qi = qh.find(m);
  if (qi != qh.end()) cq = qi->second;
  rep.count_in_quotient = cq;
  rep.count_identity = (Nat(cg) == Nat(cq) * Nat(n.order()));

  // every x of order m must map to a coset of order exactly m
  rep.coset_orders_lift = true;
  for (std::uint32_t id = 0; id < g.order(); ++id) {
    if (g.order_of(id) != m) continue;
    std::uint32_t img = q.image_of(id);
    if (q.group().order_of(img) != m) {
      rep.coset_orders_lift = false;
      break;
    }
  }
  return rep;
}

}  // namespace gkv
