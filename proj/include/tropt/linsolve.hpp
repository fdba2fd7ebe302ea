#pragma once

// Complete solutions of the linear vector inequalities
//   A x <= d,   A x + b <= x,   and the system {A x + b <= x, x <= d}.

#include <optional>
#include <string>

#include "tropt/linalg.hpp"

namespace tropt {

/// The parametrized family {x = G u : lower <= u <= upper}. A missing upper
/// bound means u is unbounded above. Zero entries of `lower` impose no bound.
template <class S>
struct SolutionSet {
  Matrix<S> generator;
  Vector<S> lower;
  std::optional<Vector<S>> upper;
  std::optional<S> minimum;

  std::size_t dim() const { return generator.rows(); }

  bool empty(double eps = kDefaultEps) const {
    return upper.has_value() && !approx_leq(lower, *upper, eps);
  }

  Vector<S> point(const Vector<S>& u) const { return generator * u; }

  /// Lower-bound parameter made regular: zero entries are lifted to the
  /// upper bound when one exists, otherwise to one.
  Vector<S> regular_lower() const {
    Vector<S> u = lower;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) u[i] = upper ? (*upper)[i] : S::one();
    }
    return u;
  }

  /// G l, or G applied to the regularized lower bound when G l has zero entries.
  Vector<S> representative() const {
    Vector<S> x = generator * lower;
    if (x.regular()) return x;
    return generator * regular_lower();
  }

  /// Greatest u with G u <= x (residuation), capped by the upper bound.
  Vector<S> residual(const Vector<S>& x) const {
    Vector<S> u = conj(conj(x) * generator);
    return upper ? meet(u, *upper) : u;
  }

  /// True when every admissible u yields the same x: G is monotone, so this
  /// holds iff G lower == G upper.
  bool unique(double eps = kDefaultEps) const {
    return upper.has_value() && approx_equal(generator * lower, generator * *upper, eps);
  }

  /// Decides x = G u for some u in [lower, upper]. The largest admissible
  /// candidate is residual(x); x belongs iff it reproduces x and clears the
  /// lower bound.
  bool contains(const Vector<S>& x, double eps = kDefaultEps) const {
    if (x.size() != dim() || !x.regular()) return false;
    if (!generator.column_regular()) return false;
    const Vector<S> u = residual(x);
    return approx_equal(generator * u, x, eps) && approx_leq(lower, u, eps);
  }
};

/// Greatest solution of A x <= d, i.e. (d⁻ A)⁻; every x below it solves the inequality.
template <class S>
Vector<S> solve_upper_bounded(const Matrix<S>& a, const Vector<S>& d) {
  detail::require(a.rows() == d.size(), Errc::ShapeMismatch, "A and d dimensions differ");
  detail::require(a.column_regular(), Errc::NotColumnRegular, "A has a zero column");
  detail::require(d.regular(), Errc::NotRegularVector, "d has zero entries");
  return conj(conj(d) * a);
}

/// Regular solutions of A x + b <= x: x = A* u with u >= b, provided Tr(A) <= 1.
template <class S>
SolutionSet<S> solve_fixpoint_lower(const Matrix<S>& a, const Vector<S>& b,
                                    double eps = kDefaultEps) {
  detail::require_square(a, "solve_fixpoint_lower");
  detail::require(a.rows() == b.size(), Errc::ShapeMismatch, "A and b dimensions differ");
  const S tr = big_tr(a);
  if (!approx_leq(tr, S::one(), eps)) {
    throw Error(Errc::NoRegularSolution, "Tr(A) = " + tr.to_string() + " exceeds one");
  }
  return SolutionSet<S>{kleene_star(a), b, std::nullopt, std::nullopt};
}

/// Regular solutions of {A x + b <= x, x <= d}: x = A* u with b <= u <= (d⁻ A*)⁻,
/// provided Delta = Tr(A) + d⁻ A* b <= 1.
template <class S>
SolutionSet<S> solve_combined(const Matrix<S>& a, const Vector<S>& b, const Vector<S>& d,
                              double eps = kDefaultEps) {
  detail::require_square(a, "solve_combined");
  detail::require(a.rows() == b.size() && a.rows() == d.size(), Errc::ShapeMismatch,
                  "A, b and d dimensions differ");
  detail::require(d.regular(), Errc::NotRegularVector, "d has zero entries");
  const Matrix<S> star = kleene_star(a);
  const RowVector<S> d_star = conj(d) * star;
  const S tr = big_tr(a);
  const S delta = tr + d_star * b;
  if (!approx_leq(delta, S::one(), eps)) {
    throw Error(Errc::NoRegularSolution,
                "Delta = Tr(A) + d⁻A*b = " + delta.to_string() + " exceeds one (Tr(A) = " +
                    tr.to_string() + ")");
  }
  return SolutionSet<S>{star, b, conj(d_star), std::nullopt};
}

}  // namespace tropt
