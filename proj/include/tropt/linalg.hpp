#pragma once

// Square-matrix algebra built on the products in matrix.hpp: trace, powers,
// the Kleene star, Tr, the spectral radius and the binomial sum families
// S_k / T_k used by the constrained solvers.

#include <cstddef>
#include <vector>

#include "tropt/matrix.hpp"

namespace tropt {

namespace detail {

template <class S>
void require_square(const Matrix<S>& a, const char* what) {
  require(a.square(), Errc::NotSquare,
          std::string(what) + " needs a square matrix, got " + shape(a.rows(), a.cols()));
}

}  // namespace detail

template <class S>
S trace(const Matrix<S>& a) {
  detail::require_square(a, "trace");
  S out = S::zero();
  for (std::size_t i = 0; i < a.rows(); ++i) out += a(i, i);
  return out;
}

/// A^m with A^0 = I.
template <class S>
Matrix<S> mat_pow(const Matrix<S>& a, unsigned m) {
  detail::require_square(a, "mat_pow");
  Matrix<S> result = Matrix<S>::identity(a.rows());
  Matrix<S> base = a;
  while (m > 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m > 0) base = base * base;
  }
  return result;
}

/// A, A^2, ..., A^n in a vector indexed from 0 (entry k holds A^k, entry 0 is I).
template <class S>
std::vector<Matrix<S>> power_sequence(const Matrix<S>& a, std::size_t upto) {
  detail::require_square(a, "power_sequence");
  std::vector<Matrix<S>> out;
  out.reserve(upto + 1);
  out.push_back(Matrix<S>::identity(a.rows()));
  for (std::size_t k = 1; k <= upto; ++k) out.push_back(out.back() * a);
  return out;
}

/// Tr(A) = tr A + tr A^2 + ... + tr A^n.
template <class S>
S big_tr(const Matrix<S>& a) {
  detail::require_square(a, "big_tr");
  S out = S::zero();
  Matrix<S> p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    out += trace(p);
    if (k < a.rows()) p = p * a;
  }
  return out;
}

/// A* = I + A + ... + A^(n-1), computed as (I + A)^(n-1) by repeated squaring.
template <class S>
Matrix<S> kleene_star(const Matrix<S>& a) {
  detail::require_square(a, "kleene_star");
  const std::size_t n = a.rows();
  if (n <= 1) return Matrix<S>::identity(n);
  return mat_pow(Matrix<S>::identity(n) + a, static_cast<unsigned>(n - 1));
}

/// lambda = tr A + tr^(1/2)(A^2) + ... + tr^(1/n)(A^n); the maximum cycle mean for max-plus.
template <class S>
S spectral_radius(const Matrix<S>& a) {
  detail::require_square(a, "spectral_radius");
  S out = S::zero();
  Matrix<S> p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    out += pow(trace(p), Rational(1, static_cast<std::int64_t>(k)));
    if (k < a.rows()) p = p * a;
  }
  return out;
}

/// An eigenvector for the spectral radius: the column of (lambda^-1 A)* at a
/// node whose closed-walk weight in lambda^-1 A reaches one.
template <class S>
Vector<S> eigenvector(const Matrix<S>& a) {
  const S lambda = spectral_radius(a);
  if (lambda.is_zero()) throw Error(Errc::ZeroSpectralRadius, "matrix has no cycles");
  const Matrix<S> scaled = inv(lambda) * a;
  const Matrix<S> star = kleene_star(scaled);
  const Matrix<S> plus = scaled * star;
  std::size_t best = 0;
  for (std::size_t j = 0; j < a.rows(); ++j) {
    if (plus(j, j) == S::one()) return star.column(j);
    if (plus(best, best) < plus(j, j)) best = j;
  }
  // float rounding can leave the critical diagonal a hair below one
  return star.column(best);
}

/// The binomial sum families for a pair of square matrices A, B of order n:
///
///   S_0 = I,  S_k = sum over i_1+...+i_k <= n-k of A B^i_1 ... A B^i_k   (k = 1..n)
///   T_0 = B*, T_k = sum over i_0+...+i_k <= n-k-1 of B^i_0 A B^i_1 ... A B^i_k  (k = 1..n-1)
///
/// Computed by dynamic programming over words with an exact B-budget m:
///   W_k[m] = W_k[m-1] B + W_{k-1}[m] A,
/// seeded with W_0[m] = [m == 0] I for S and W_0[m] = B^m for T, then
/// prefix-summed over m.
template <class S>
struct SumFamilies {
  std::vector<Matrix<S>> s;  // S_0..S_n
  std::vector<Matrix<S>> t;  // T_0..T_{n-1}
};

namespace detail {

template <class S>
std::vector<Matrix<S>> budgeted_words(const Matrix<S>& a, const Matrix<S>& b,
                                      const std::vector<Matrix<S>>& seed, std::size_t max_k,
                                      std::size_t n, std::size_t slack) {
  // out[k] = sum over budgets m <= n - k - slack of W_k[m]
  const std::size_t dim = a.rows();
  std::vector<Matrix<S>> out;
  out.reserve(max_k + 1);
  std::vector<Matrix<S>> prev = seed;  // W_{k-1}[m], m = 0..budget
  auto prefix = [&](const std::vector<Matrix<S>>& w, std::size_t budget) {
    Matrix<S> acc(dim, dim);
    for (std::size_t m = 0; m <= budget && m < w.size(); ++m) acc = acc + w[m];
    return acc;
  };
  out.push_back(prefix(prev, n >= slack ? n - slack : 0));
  for (std::size_t k = 1; k <= max_k; ++k) {
    const std::size_t budget = n - k - slack;
    std::vector<Matrix<S>> cur;
    cur.reserve(budget + 1);
    for (std::size_t m = 0; m <= budget; ++m) {
      Matrix<S> w = prev[m] * a;
      if (m > 0) w = w + cur[m - 1] * b;
      cur.push_back(std::move(w));
    }
    out.push_back(prefix(cur, budget));
    prev = std::move(cur);
  }
  return out;
}

template <class S>
void require_pair(const Matrix<S>& a, const Matrix<S>& b) {
  require_square(a, "sum families");
  require(b.rows() == a.rows() && b.cols() == a.cols(), Errc::ShapeMismatch,
          "A and B must be square of the same order");
}

}  // namespace detail

template <class S>
SumFamilies<S> sum_families(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_pair(a, b);
  const std::size_t n = a.rows();
  SumFamilies<S> f;
  if (n == 0) return f;
  std::vector<Matrix<S>> s_seed(n + 1, Matrix<S>(n, n));
  s_seed[0] = Matrix<S>::identity(n);
  f.s = detail::budgeted_words(a, b, s_seed, n, n, 0);
  f.t = detail::budgeted_words(a, b, power_sequence(b, n - 1), n - 1, n, 1);
  return f;
}

template <class S>
Matrix<S> compute_s(const Matrix<S>& a, const Matrix<S>& b, std::size_t k) {
  detail::require_pair(a, b);
  detail::require(k <= a.rows(), Errc::IndexOutOfRange,
                  "S_k defined for 0 <= k <= n, got k = " + std::to_string(k));
  return sum_families(a, b).s[k];
}

template <class S>
Matrix<S> compute_t(const Matrix<S>& a, const Matrix<S>& b, std::size_t k) {
  detail::require_pair(a, b);
  detail::require(k + 1 <= a.rows(), Errc::IndexOutOfRange,
                  "T_k defined for 0 <= k <= n-1, got k = " + std::to_string(k));
  return sum_families(a, b).t[k];
}

}  // namespace tropt
