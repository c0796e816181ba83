#pragma once

// Gruenberg-Kegel (prime) graph: vertices pi(G), edge {r,s} iff rs lies in
// the spectrum; components ordered with the component of 2 first.

#include "gkv/arith.hpp"
#include "gkv/spectra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gkv {

struct PrimeGraph {
  std::set<std::uint64_t> vertices;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // r < s
  std::vector<std::set<std::uint64_t>> components;          // pi_1 ... pi_s
  std::vector<std::set<std::uint64_t>> mu_i;                // aligned with components
  std::vector<std::optional<std::uint64_t>> n_i;            // set for i >= 2 when unique

  unsigned s() const { return static_cast<unsigned>(components.size()); }

  int component_index_of(std::uint64_t p) const {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].count(p)) return static_cast<int>(i) + 1;
    return 0;
  }
};

inline std::set<std::uint64_t> u64_prime_set(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (const Nat& p : prime_set(Nat(n))) out.insert(to_u64(p));
  return out;
}

inline PrimeGraph build_gk(const std::set<std::uint64_t>& spec) {
  if (!spec.count(1)) throw std::invalid_argument("spectrum must contain 1");
  for (std::uint64_t n : spec)
    for (std::uint64_t d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        if (!spec.count(d) || !spec.count(n / d))
          throw std::invalid_argument("spectrum is not divisor-closed: " + std::to_string(n));
      }

  PrimeGraph g;
  std::map<std::uint64_t, std::set<std::uint64_t>> pi_of;
  for (std::uint64_t n : spec) {
    pi_of[n] = u64_prime_set(n);
    for (std::uint64_t p : pi_of[n]) g.vertices.insert(p);
  }
  for (std::uint64_t r : g.vertices)
    for (std::uint64_t s : g.vertices)
      if (r < s && spec.count(r * s)) g.edges.insert({r, s});

  // connected components via BFS
  std::set<std::uint64_t> unvisited = g.vertices;
  std::vector<std::set<std::uint64_t>> comps;
  while (!unvisited.empty()) {
    std::uint64_t start = *unvisited.begin();
    std::set<std::uint64_t> comp;
    std::vector<std::uint64_t> q = {start};
    unvisited.erase(start);
    comp.insert(start);
    while (!q.empty()) {
      std::uint64_t x = q.back();
      q.pop_back();
      for (std::uint64_t y : g.vertices) {
        if (comp.count(y)) continue;
        auto e = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        if (g.edges.count(e)) {
          comp.insert(y);
          unvisited.erase(y);
          q.push_back(y);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  // ordering: component of 2 first when present, the rest by least vertex
  std::sort(comps.begin(), comps.end(),
            [](const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
              bool a2 = a.count(2), b2 = b.count(2);
              if (a2 != b2) return a2;
              return *a.begin() < *b.begin();
            });
  g.components = std::move(comps);

  std::set<std::uint64_t> mu = mu_set(spec);
  g.mu_i.resize(g.components.size());
  g.n_i.assign(g.components.size(), std::nullopt);
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    for (std::uint64_t a : mu) {
      const auto& pa = pi_of[a];
      bool inside = !pa.empty();
      for (std::uint64_t p : pa)
        if (!g.components[i].count(p)) inside = false;
      if (inside) g.mu_i[i].insert(a);
    }
    if (i >= 1 && g.mu_i[i].size() == 1) g.n_i[i] = *g.mu_i[i].begin();
  }
  return g;
}

inline bool is_disconnected(const PrimeGraph& g) { return g.s() >= 2; }

struct ComponentData {
  std::set<std::uint64_t> vertices;
  std::set<std::uint64_t> mu;
  std::optional<std::uint64_t> n;
};

inline ComponentData component_data(const PrimeGraph& g, unsigned i) {
  if (i < 1 || i > g.s()) throw std::out_of_range("component index out of range");
  return ComponentData{g.components[i - 1], g.mu_i[i - 1], g.n_i[i - 1]};
}

// plain-text Graphviz form
inline std::string to_dot(const PrimeGraph& g) {
  std::ostringstream os;
  os << "graph gk {\n";
  for (std::uint64_t v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& [r, s] : g.edges) os << "  \"" << r << "\" -- \"" << s << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gkv
