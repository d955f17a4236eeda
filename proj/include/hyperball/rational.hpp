#pragma once

// Exact integer/rational arithmetic for factorial sums. Alternating sums of
// factorial ratios cancel catastrophically in doubles, so every closed-form
// constant has an exact path; doubles only appear at the final conversion.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperball {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

inline std::string rat_string(const BigRat& r) { return r.str(); }

} // namespace hyperball
