#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schubert {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline bool is_integer(const Rational &q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator(const Rational &q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational &q) {
  return boost::multiprecision::denominator(q);
}

/// "3", "-1/2", ...
inline std::string to_string(const Rational &q) { return q.str(); }

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Rational abs(const Rational &q) { return q < 0 ? Rational(-q) : q; }

} // namespace schubert
