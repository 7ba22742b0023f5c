#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace rieszkit {

/// Arbitrary-precision rational used by the exact interval path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::int64_t floor_index(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("floor_index: non-finite value");
  return static_cast<std::int64_t>(std::floor(x));
}

inline std::int64_t floor_index(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  const BigInt d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f.convert_to<std::int64_t>();
}

template <class T>
std::int64_t ceil_index(const T& x) {
  return -floor_index(T(-x));
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num, den);
}

inline Rational pow2_rational(int e) {
  if (e < 0) return Rational(1) / pow2_rational(-e);
  BigInt p = 1;
  p <<= e;
  return Rational(p);
}

}  // namespace rieszkit
