#ifndef FAIRLINE_RATIONAL_HPP
#define FAIRLINE_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairline {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. Backed by cpp_rational, which keeps
/// every value in lowest terms with a positive denominator, so comparisons
/// and arithmetic are exact everywhere; the library never rounds.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses one of three exact forms:
///   integer        "42", "-7"
///   finite decimal "0.125", "-3.5"
///   fraction       "p/q" with unsigned q > 0, e.g. "22/7", "-1/3"
/// No whitespace, no exponents. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or just "p" when q == 1.
std::string format_rational(const Rational& q);

/// Largest integer <= q.
BigInt floor_rational(const Rational& q);

} // namespace fairline

#endif
