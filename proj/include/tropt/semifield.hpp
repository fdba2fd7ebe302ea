#pragma once

// Scalar arithmetic of a linearly ordered, radicable idempotent semifield.
//
// A semifield instance is a policy type supplying the operations on nonzero
// elements; the zero element is carried separately by Scalar. Any new policy
// must define a *total* order on nonzero values that is compatible with the
// semifield addition: x + y (tropical) returns the larger of the two under
// `less_equal`. Max-plus and its order-reversed dual min-plus are provided.

#include <concepts>
#include <limits>
#include <ostream>
#include <string>
#include <type_traits>

#include "tropt/error.hpp"
#include "tropt/numeric.hpp"

namespace tropt {

template <class P>
concept SemifieldPolicy = requires(const typename P::value_type& a,
                                   const typename P::value_type& b, const Rational& r) {
  typename P::value_type;
  { P::one() } -> std::convertible_to<typename P::value_type>;
  { P::mul(a, b) } -> std::convertible_to<typename P::value_type>;
  { P::inv(a) } -> std::convertible_to<typename P::value_type>;
  { P::pow(a, r) } -> std::convertible_to<typename P::value_type>;
  { P::less_equal(a, b) } -> std::convertible_to<bool>;
  { P::zero_text() } -> std::convertible_to<const char*>;
};

/// (R ∪ {-inf}, max, +): zero is -inf, one is 0.
template <class V>
struct MaxPlus {
  using value_type = V;
  static V one() { return V(0); }
  static V mul(const V& a, const V& b) { return a + b; }
  static V inv(const V& a) { return -a; }
  static V pow(const V& a, const Rational& r) { return a * NumericTraits<V>::from_rational(r); }
  static bool less_equal(const V& a, const V& b) { return a <= b; }
  static const char* zero_text() { return "-inf"; }
  /// Sign of the infinity that encodes zero when V is a float type.
  static constexpr int zero_sign = -1;
};

/// (R ∪ {+inf}, min, +): the dual instance, obtained by reversing the order.
template <class V>
struct MinPlus {
  using value_type = V;
  static V one() { return V(0); }
  static V mul(const V& a, const V& b) { return a + b; }
  static V inv(const V& a) { return -a; }
  static V pow(const V& a, const Rational& r) { return a * NumericTraits<V>::from_rational(r); }
  static bool less_equal(const V& a, const V& b) { return a >= b; }
  static const char* zero_text() { return "+inf"; }
  static constexpr int zero_sign = +1;
};

/// An element of the semifield P: either the zero element or a finite value.
/// Scalars are immutable values.
template <SemifieldPolicy P>
class Scalar {
 public:
  using policy_type = P;
  using value_type = typename P::value_type;

  /// Zero (the additive identity).
  Scalar() = default;

  /// A finite element. For float carriers the infinity of the policy's zero
  /// sign maps to zero; any other non-finite value is rejected.
  Scalar(value_type v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_floating_point_v<value_type>) {
      if (std::isnan(v)) throw Error(Errc::ParseError, "NaN is not a semifield element");
      if (std::isinf(v)) {
        if ((v < 0 ? -1 : 1) != P::zero_sign) {
          throw Error(Errc::ParseError, "infinity of the wrong sign is not a semifield element");
        }
        return;
      }
    }
    value_ = v;
    zero_ = false;
  }

  template <std::integral I>
    requires(!std::is_same_v<I, bool>)
  Scalar(I v) : Scalar(value_type(v)) {}  // NOLINT(google-explicit-constructor)

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(P::one()); }

  bool is_zero() const { return zero_; }

  /// Finite value; throws when called on zero.
  const value_type& value() const {
    if (zero_) throw Error(Errc::InversionOfZero, "zero has no finite value");
    return value_;
  }

  /// Conventional double view; zero maps to the policy's signed infinity.
  double to_double() const {
    if (zero_) return P::zero_sign * std::numeric_limits<double>::infinity();
    return NumericTraits<value_type>::to_double(value_);
  }

  std::string to_string() const {
    return zero_ ? std::string(P::zero_text()) : NumericTraits<value_type>::to_string(value_);
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.zero_) return y;
    if (y.zero_) return x;
    return P::less_equal(x.value_, y.value_) ? y : x;
  }

  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.zero_ || y.zero_) return Scalar();
    return Scalar(P::mul(x.value_, y.value_));
  }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (x.zero_ || y.zero_) return x.zero_ == y.zero_;
    return x.value_ == y.value_;
  }

  /// Semifield order: x <= y iff x + y == y.
  friend bool operator<=(const Scalar& x, const Scalar& y) {
    if (x.zero_) return true;
    if (y.zero_) return false;
    return P::less_equal(x.value_, y.value_);
  }
  friend bool operator<(const Scalar& x, const Scalar& y) { return x <= y && !(x == y); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return y <= x; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

 private:
  value_type value_{};
  bool zero_ = true;
};

using MaxPlusD = Scalar<MaxPlus<double>>;
using MaxPlusQ = Scalar<MaxPlus<Rational>>;
using MinPlusD = Scalar<MinPlus<double>>;
using MinPlusQ = Scalar<MinPlus<Rational>>;

template <class T>
inline constexpr bool is_scalar_v = false;
template <class P>
inline constexpr bool is_scalar_v<Scalar<P>> = true;

template <class P>
Scalar<P> add(const Scalar<P>& x, const Scalar<P>& y) {
  return x + y;
}

template <class P>
Scalar<P> mul(const Scalar<P>& x, const Scalar<P>& y) {
  return x * y;
}

template <class P>
Scalar<P> inv(const Scalar<P>& x) {
  if (x.is_zero()) throw Error(Errc::InversionOfZero, "zero has no multiplicative inverse");
  return Scalar<P>(P::inv(x.value()));
}

/// Rational power; pow(x, 0) is one and pow(zero, r) is zero for r > 0.
template <class P>
Scalar<P> pow(const Scalar<P>& x, const Rational& r) {
  if (x.is_zero()) {
    if (r > Rational(0)) return x;
    throw Error(Errc::UndefinedPower, "zero raised to a non-positive power");
  }
  if (r == Rational(0)) return Scalar<P>::one();
  return Scalar<P>(P::pow(x.value(), r));
}

template <class P>
bool leq(const Scalar<P>& x, const Scalar<P>& y) {
  return x <= y;
}

/// Equality with absolute tolerance eps on finite float values; exact otherwise.
template <class P>
bool approx_equal(const Scalar<P>& x, const Scalar<P>& y, double eps = kDefaultEps) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
  return NumericTraits<typename P::value_type>::approx_equal(x.value(), y.value(), eps);
}

/// x <= y allowing eps slack in float mode.
template <class P>
bool approx_leq(const Scalar<P>& x, const Scalar<P>& y, double eps = kDefaultEps) {
  return x <= y || approx_equal(x, y, eps);
}

}  // namespace tropt
