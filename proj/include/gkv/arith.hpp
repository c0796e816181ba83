#pragma once

// Exact natural-number arithmetic: factorization, totients, r-parts and
// primitive prime divisors. Everything is arbitrary precision; there is no
// floating point anywhere in this library.

#include "gkv/nat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gkv {

// ---------------------------------------------------------------------------
// prime sieve

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    const std::uint32_t limit = 2'000'000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (!comp[i]) {
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) comp[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

// ---------------------------------------------------------------------------
// primality

// Deterministic for n < 3.3e24 with this witness set; for larger inputs it is
// a strong probable-prime test, which is as much certification as this
// project needs (see module non-goals).
inline bool is_prime(const Nat& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Nat d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    Nat x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace detail {

// Pollard rho (Brent variant), deterministic over increments c = 1, 2, ...
// Returns a nontrivial factor or 0 when the iteration budget runs out.
inline Nat pollard_brent(const Nat& n, std::uint64_t max_iters) {
  if (n % 2 == 0) return 2;
  std::uint64_t iters = 0;
  for (Nat c = 1; c <= 6; ++c) {
    Nat y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const std::uint64_t batch = 128;
    while (g == 1 && iters < max_iters) {
      x = y;
      for (Nat i = 0; i < r; ++i) y = (y * y + c) % n;
      Nat k = 0;
      while (k < r && g == 1) {
        ys = y;
        Nat lim = r - k < batch ? r - k : Nat(batch);
        for (Nat i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Nat d = x - y;
          if (d < 0) d = -d;
          q = q * d % n;
        }
        g = nat_gcd(q, n);
        k += batch;
        iters += to_u64(lim);
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Nat d = x - ys;
        if (d < 0) d = -d;
        g = nat_gcd(d, n);
      }
    }
    if (g != n && g > 1) return g;
  }
  return 0;
}

// Pollard p-1, stage 1 with bound B. Catches factors p with p-1 powersmooth.
inline Nat pollard_pm1(const Nat& n, std::uint32_t bound) {
  Nat a = 2;
  const auto& primes = small_primes();
  std::uint32_t since_check = 0;
  for (std::uint32_t p : primes) {
    if (p > bound) break;
    std::uint64_t pk = p;
    while (pk <= bound) pk *= p;
    pk /= p;
    a = powmod(a, Nat(pk), n);
    if (++since_check == 512) {
      since_check = 0;
      Nat g = nat_gcd(a - 1, n);
      if (g > 1 && g < n) return g;
      if (g == n) return 0;
    }
  }
  Nat g = nat_gcd(a - 1, n);
  if (g > 1 && g < n) return g;
  return 0;
}

inline void factor_into(Nat n, std::map<Nat, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Nat f = pollard_brent(n, 4'000'000);
  if (f == 0) f = pollard_pm1(n, 1'000'000);
  if (f == 0) f = pollard_brent(n, 80'000'000);
  if (f == 0 || f == 1 || f == n)
    throw std::runtime_error("factorize: budget exhausted on " + n.str());
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Factorization

// An exact natural number together with its prime factorization.
// Invariants: product of p^e equals value; keys prime, strictly increasing;
// value == 1 iff factors empty.
struct Factorization {
  Nat value = 1;
  std::map<Nat, unsigned> factors;

  std::set<Nat> prime_set() const {
    std::set<Nat> out;
    for (const auto& [p, e] : factors) out.insert(p);
    return out;
  }

  unsigned exponent_of(const Nat& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? 0u : it->second;
  }

  Factorization& operator*=(const Factorization& o) {
    value *= o.value;
    for (const auto& [p, e] : o.factors) factors[p] += e;
    return *this;
  }
  friend Factorization operator*(Factorization a, const Factorization& b) {
    a *= b;
    return a;
  }

  // exact division; throws if o does not divide *this
  Factorization& divide_exact(const Factorization& o) {
    for (const auto& [p, e] : o.factors) {
      auto it = factors.find(p);
      if (it == factors.end() || it->second < e)
        throw std::domain_error("divide_exact: not divisible");
      it->second -= e;
      if (it->second == 0) factors.erase(it);
    }
    value /= o.value;
    return *this;
  }

  Factorization pow(unsigned k) const {
    Factorization r;
    if (k == 0) return r;
    r.value = nat_pow(value, k);
    for (const auto& [p, e] : factors) r.factors[p] = e * k;
    return r;
  }

  bool operator==(const Factorization& o) const {
    return value == o.value && factors == o.factors;
  }
};

inline Factorization factorize(const Nat& n) {
  if (n < 1) throw std::domain_error("factorize: n must be >= 1");
  Factorization f;
  f.value = n;
  Nat m = n;
  for (std::uint32_t p : small_primes()) {
    if (Nat(p) * p > m) break;
    while (m % p == 0) {
      f.factors[p] += 1;
      m /= p;
    }
  }
  if (m > 1) detail::factor_into(m, f.factors);
  return f;
}

// pi(n): the set of prime divisors of n
inline std::set<Nat> prime_set(const Nat& n) { return factorize(n).prime_set(); }

// Euler totient via the product formula
inline Nat euler_phi(const Nat& n) {
  Factorization f = factorize(n);
  Nat r = n;
  for (const auto& [p, e] : f.factors) r = r / p * (p - 1);
  return r;
}

inline Nat euler_phi(const Factorization& f) {
  Nat r = f.value;
  for (const auto& [p, e] : f.factors) r = r / p * (p - 1);
  return r;
}

// |n|_r: the r-part of n; r must be prime
inline Nat r_part(const Nat& n, const Nat& r) {
  if (n < 1) throw std::domain_error("r_part: n must be >= 1");
  if (!is_prime(r)) throw std::domain_error("r_part: r must be prime");
  Nat part = 1, m = n;
  while (m % r == 0) {
    part *= r;
    m /= r;
  }
  return part;
}

// ---------------------------------------------------------------------------
// cyclotomic factorization of q^n -+ 1

inline std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

// value of the d-th cyclotomic polynomial at q, via
// Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q)
inline Nat cyclotomic_value(unsigned d, const Nat& q) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, Nat>, Nat> memo;
  auto key = std::make_pair(d, q);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Nat v = nat_pow(q, d) - 1;
  for (unsigned e : divisors_of(d))
    if (e < d) v /= cyclotomic_value(e, q);
  std::lock_guard<std::mutex> lock(mu);
  memo[key] = v;
  return v;
}

// factorization of q^n - 1 assembled from its cyclotomic pieces; each piece is
// far smaller than the product, which keeps Pollard in easy territory
inline Factorization factor_pow_minus_1(const Nat& q, unsigned n) {
  Factorization out;
  for (unsigned d : divisors_of(n)) out *= factorize(cyclotomic_value(d, q));
  return out;
}

// q^n + 1 = (q^2n - 1)/(q^n - 1): the cyclotomic pieces at d | 2n, d not | n
inline Factorization factor_pow_plus_1(const Nat& q, unsigned n) {
  Factorization out;
  for (unsigned d : divisors_of(2 * n))
    if (n % d != 0) out *= factorize(cyclotomic_value(d, q));
  return out;
}

// multiplicative order of q modulo the prime p (q not divisible by p)
inline Nat multiplicative_order(const Nat& q, const Nat& p) {
  Nat n = p - 1;
  Factorization f = factorize(n);
  for (const auto& [r, e] : f.factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(q, n / r, p) == 1)
        n /= r;
      else
        break;
    }
  }
  return n;
}

// ---------------------------------------------------------------------------
// Zsigmondy: smallest primitive prime divisor of q^n - 1, i.e. the smallest
// prime p with p | q^n - 1 and p not dividing q^i - 1 for 1 <= i < n.
// Returns nullopt exactly on the classical exception set.
inline std::optional<Nat> zsigmondy(const Nat& q, unsigned n) {
  if (q < 2) throw std::domain_error("zsigmondy: q must be >= 2");
  if (n < 2) throw std::domain_error("zsigmondy: n must be >= 2");

  auto is_primitive = [&](const Nat& p) {
    if (q % p == 0) return false;
    if (powmod(q, n, p) != 1) return false;
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0 && powmod(q, d, p) == 1) return false;
    // remaining proper divisors cannot give order n anyway; the loop above
    // over divisors suffices since ord | n
    return true;
  };

  // primitive primes satisfy p = 1 (mod n): scan the sieve first
  for (std::uint32_t p : small_primes()) {
    if (p % n != 1) continue;
    if (is_primitive(Nat(p))) return Nat(p);
  }

  // no small primitive prime: all remaining candidates divide Phi_n(q);
  // strip the intrinsic part (primes dividing n) and factor what is left
  Nat c = cyclotomic_value(n, q);
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d == 0 && is_prime(Nat(d)))
      while (c % d == 0) c /= d;
  }
  if (c == 1) return std::nullopt;
  Factorization f = factorize(c);
  return f.factors.begin()->first;
}

}  // namespace gkv
