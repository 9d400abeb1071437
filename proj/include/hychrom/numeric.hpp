#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace hychrom {

// Exact arbitrary-precision integer. Coefficient magnitudes can reach
// 2^|E|, so fixed-width integers are never used for polynomial data.
using Int = boost::multiprecision::cpp_int;

// Exact rational, used for partition scores f(P).
using Rational = boost::multiprecision::cpp_rational;

// High-precision float (~50 decimal digits / 168-bit mantissa) for bound
// right-hand sides and root finding.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

// Decimal digits carried by Real, recorded in serialized reports.
inline constexpr int kRealDigits = 50;

inline const Real& euler_number() {
  static const Real e = exp(Real(1));
  return e;
}

// Relative slack applied on the bound side of float comparisons so rounding
// in a ~50-digit right side can never flip a verdict.
inline Real bound_slack(const Real& bound) { return Real("1e-9") * bound; }

inline bool leq_with_slack(const Real& lhs, const Real& bound) {
  return lhs <= bound + bound_slack(bound);
}

// Integer power with the empty-product convention 0^0 = 1.
inline Real real_power(const Real& base, int exponent) {
  Real acc = 1;
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

// Fixed-width scientific rendering, deterministic across runs and platforms.
inline std::string to_decimal(const Real& v, int digits = kRealDigits) {
  return v.str(digits, std::ios_base::scientific);
}

// SplitMix64, used to derive independent per-instance sub-seeds from a
// master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace hychrom
