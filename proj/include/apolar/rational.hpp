#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace apolar {

// Exact arithmetic everywhere: arbitrary-precision rationals kept in lowest
// terms with positive denominator (the backend normalizes on every op).
// Expression templates are off so values behave like plain scalars inside
// Eigen expressions and containers.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt denominator(const Rational& q) {
  return BigInt(boost::multiprecision::denominator(q));
}

/// "p" or "p/q" with optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, else "p/q", q > 0.
std::string format_rational(const Rational& q);

}  // namespace apolar
