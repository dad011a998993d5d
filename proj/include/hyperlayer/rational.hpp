#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hyperlayer {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned k) {
  BigInt result = 1;
  for (unsigned i = 2; i <= k; ++i) result *= i;
  return result;
}

/// Always `p/q` with q > 0 in lowest terms, including integers (`3/1`).
inline std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hyperlayer
