#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tn {

// Arbitrary-precision integers and rationals. Compositions of automorphisms
// and iterated coset moves can grow entries without bound, so nothing in the
// library assumes machine-word magnitudes.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor division that is exact for negatives as well (cpp_int's operator/
// truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& v) {
  return floor_div(boost::multiprecision::numerator(v),
                   boost::multiprecision::denominator(v));
}

inline bool is_integer(const Rat& v) {
  return boost::multiprecision::denominator(v) == 1;
}

}  // namespace tn
