#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace borbit {

// Exact arithmetic base types.  cpp_rational keeps a canonical reduced form
// with positive denominator, which is exactly the contract the rest of the
// library relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& v) {
  Int num = numerator(v), den = denominator(v);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

inline Rat ring_inverse(const Rat& v) {
  if (v == 0) throw std::domain_error("inverse of zero rational");
  return Rat(1) / v;
}

// v^e for integer e (negative allowed when v != 0).
inline Rat rat_pow(const Rat& v, long e) {
  if (e == 0) return Rat(1);
  if (v == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return Rat(0);
  }
  Rat base = e > 0 ? v : ring_inverse(v);
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace borbit
