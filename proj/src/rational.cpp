#include "rac/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace rac {

namespace {

bool parse_int(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return false;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num, den;
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }
  // Decimal: [sign] digits [. digits] [eE [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      any_digit = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      return std::nullopt;
    }
  }
  if (!any_digit) return std::nullopt;
  long exp10 = 0;
  if (i < text.size()) {
    ++i;  // skip e/E
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return std::nullopt;
    long e = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      e = e * 10 + (text[i] - '0');
      if (e > 100000) return std::nullopt;
    }
    exp10 = eneg ? -e : e;
  }
  long net = exp10 - frac_digits;
  Rational r(mantissa, 1);
  if (net > 0) {
    BigInt p = 1;
    for (long k = 0; k < net; ++k) p *= 10;
    r *= Rational(p, 1);
  } else if (net < 0) {
    BigInt p = 1;
    for (long k = 0; k < -net; ++k) p *= 10;
    r /= Rational(p, 1);
  }
  if (neg) r = -r;
  return r;
}

std::string to_fraction_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

std::string to_decimal_string(double v) {
  // Find the shortest precision that round-trips.
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

Rational decimal_value_of(double v) {
  auto r = parse_rational(to_decimal_string(v));
  return r ? *r : Rational(0);
}

}  // namespace rac
