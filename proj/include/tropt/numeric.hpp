#pragma once

// Carrier types for semifield values: IEEE double for general use and an
// exact 64-bit rational for bit-exact fixtures and oracle comparisons.

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace tropt {

using Rational = boost::rational<std::int64_t>;

/// Default absolute tolerance for float-mode comparisons.
inline constexpr double kDefaultEps = 1e-9;

template <class V>
struct NumericTraits;

template <>
struct NumericTraits<double> {
  static constexpr bool exact = false;

  static double from_rational(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  }
  static double to_double(double v) { return v; }
  static bool approx_equal(double a, double b, double eps) { return std::fabs(a - b) <= eps; }
  static std::string to_string(double v);
};

template <>
struct NumericTraits<Rational> {
  static constexpr bool exact = true;

  static Rational from_rational(const Rational& r) { return r; }
  static double to_double(const Rational& v) {
    return static_cast<double>(v.numerator()) / static_cast<double>(v.denominator());
  }
  static bool approx_equal(const Rational& a, const Rational& b, double) { return a == b; }
  static std::string to_string(const Rational& v);
};

/// Parses "7", "-3/4" or a decimal literal like "2.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Exact conversion of a double via its shortest round-trip decimal form.
Rational rational_from_double(double v);

}  // namespace tropt
