#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "giryq/error.hpp"

namespace giryq {

/// Arbitrary-precision exact rational, always normalized (lowest terms,
/// positive denominator). Expression templates are disabled so `auto`
/// captures values rather than proxies.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>,
    boost::multiprecision::et_off>;

namespace detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses "n", "n/d", "-n/d". Decimal notation is rejected.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!detail::is_digits(num) || !detail::is_digits(den)) {
    throw Error(ErrorKind::parse_error,
                "malformed rational literal '" + std::string(text) + "'");
  }
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::parse_error,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Fixed-point rendering rounded half away from zero. Display only.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  const Integer num = boost::multiprecision::numerator(a) * scale;
  const Integer den = boost::multiprecision::denominator(a);
  Integer q = num / den;
  const Integer rem = num % den;
  if (2 * rem >= den) q += 1;
  const Integer whole = q / scale;
  std::string frac = Integer(q % scale).str();
  if (static_cast<int>(frac.size()) < digits) {
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  }
  std::string out = (negative && q != 0) ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace giryq
