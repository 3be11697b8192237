#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace rac {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign(const Rational& r) { return r.sign(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p/q" (exact) or a decimal like "-1.25e2". Returns the exact value of
// the string; decimals are converted without rounding (1.25 -> 5/4).
std::optional<Rational> parse_rational(const std::string& text);

// Canonical text form: integers as "p", other rationals as "p/q".
std::string to_fraction_string(const Rational& r);

// Shortest decimal that round-trips through double, e.g. "0.1", "-2", "1e30".
std::string to_decimal_string(double v);

// The exact rational value of the decimal string to_decimal_string(v) yields.
// Used so that floating coordinates survive export/import bit-exactly.
Rational decimal_value_of(double v);

}  // namespace rac
