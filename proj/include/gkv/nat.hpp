#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkv {

using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Nat nat_pow(const Nat& base, unsigned long exp) {
  Nat r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline Nat nat_gcd(const Nat& a, const Nat& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Nat nat_lcm(const Nat& a, const Nat& b) {
  return boost::multiprecision::lcm(a, b);
}

// a^e mod m, m >= 2
inline Nat powmod(const Nat& a, const Nat& e, const Nat& m) {
  return boost::multiprecision::powm(a, e, m);
}

inline std::uint64_t to_u64(const Nat& n) {
  if (n < 0 || n > Nat(UINT64_MAX)) throw std::overflow_error("to_u64: out of range");
  return n.convert_to<std::uint64_t>();
}

inline std::string to_string(const Nat& n) { return n.str(); }

}  // namespace gkv
