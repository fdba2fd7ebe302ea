#include "tropt/numeric.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "tropt/error.hpp"

namespace tropt {

std::string NumericTraits<double>::to_string(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string NumericTraits<Rational>::to_string(const Rational& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t out = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(Errc::ParseError, "not a rational literal: '" + whole + "'");
  }
  return out;
}

Rational parse_decimal(std::string_view s, const std::string& whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::int64_t exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_int(s.substr(e + 1), whole);
    s = s.substr(0, e);
  }
  std::string digits;
  std::int64_t frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw Error(Errc::ParseError, "not a rational literal: '" + whole + "'");
    }
  }
  if (digits.empty()) throw Error(Errc::ParseError, "not a rational literal: '" + whole + "'");
  exponent -= frac_digits;
  if (digits.size() > 18 || exponent > 18 || exponent < -18) {
    throw Error(Errc::ParseError, "rational literal out of 64-bit range: '" + whole + "'");
  }
  std::int64_t mantissa = parse_int(digits, whole);
  std::int64_t scale = 1;
  for (std::int64_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
  Rational r = exponent >= 0 ? Rational(mantissa) * scale : Rational(mantissa, scale);
  return negative ? -r : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s = text;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_int(s, text));
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw Error(Errc::ParseError, "non-finite value has no rational form");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return parse_rational(std::string(buf, res.ptr));
}

}  // namespace tropt
