#pragma once

// Dense matrices and vectors over a semifield. Vectors carry their role in
// the type: Vector is a column, RowVector a row, so that products such as
// conj(d) * A * x read like the formulas they implement.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tropt/semifield.hpp"

namespace tropt {

template <class S, bool IsRow>
class BasicVector {
 public:
  using scalar_type = S;

  BasicVector() = default;
  explicit BasicVector(std::size_t dim, S fill = S::zero()) : data_(dim, fill) {}
  explicit BasicVector(std::vector<S> data) : data_(std::move(data)) {}
  BasicVector(std::initializer_list<S> init) : data_(init) {}

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  const S& operator[](std::size_t i) const { return data_[i]; }
  S& operator[](std::size_t i) { return data_[i]; }
  const S& at(std::size_t i) const { return data_.at(i); }

  std::span<const S> entries() const { return data_; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  /// All entries nonzero.
  bool regular() const {
    return !data_.empty() &&
           std::none_of(data_.begin(), data_.end(), [](const S& s) { return s.is_zero(); });
  }
  bool nonzero() const {
    return std::any_of(data_.begin(), data_.end(), [](const S& s) { return !s.is_zero(); });
  }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')' << (IsRow ? "" : "^T");
  }

 private:
  std::vector<S> data_;
};

template <class S>
using Vector = BasicVector<S, false>;
template <class S>
using RowVector = BasicVector<S, true>;

template <class S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, S fill = S::zero())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Row-major nested initializer; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::ShapeMismatch, "ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }
  static Matrix diagonal(const Vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const S> entries() const { return data_; }

  Vector<S> column(std::size_t j) const {
    Vector<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  RowVector<S> row(std::size_t i) const {
    RowVector<S> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  /// No column consists only of zeros.
  bool column_regular() const {
    for (std::size_t j = 0; j < cols_; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < rows_ && !any; ++i) any = !(*this)(i, j).is_zero();
      if (!any) return false;
    }
    return true;
  }
  bool row_regular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < cols_ && !any; ++j) any = !(*this)(i, j).is_zero();
      if (!any) return false;
    }
    return true;
  }
  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& s) { return s.is_zero(); });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

namespace detail {

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

inline std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace detail

// -- sums ---------------------------------------------------------------

template <class S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::ShapeMismatch,
                  "cannot add " + detail::shape(a.rows(), a.cols()) + " and " +
                      detail::shape(b.rows(), b.cols()));
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class S, bool R>
BasicVector<S, R> operator+(const BasicVector<S, R>& a, const BasicVector<S, R>& b) {
  detail::require(a.size() == b.size(), Errc::ShapeMismatch, "vector dimensions differ");
  BasicVector<S, R> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// -- products -----------------------------------------------------------

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require(a.cols() == b.rows(), Errc::ShapeMismatch,
                  "cannot multiply " + detail::shape(a.rows(), a.cols()) + " by " +
                      detail::shape(b.rows(), b.cols()));
  Matrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class S>
Vector<S> operator*(const Matrix<S>& a, const Vector<S>& x) {
  detail::require(a.cols() == x.size(), Errc::ShapeMismatch, "matrix-vector dimensions differ");
  Vector<S> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

template <class S>
RowVector<S> operator*(const RowVector<S>& x, const Matrix<S>& a) {
  detail::require(a.rows() == x.size(), Errc::ShapeMismatch, "vector-matrix dimensions differ");
  RowVector<S> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  return out;
}

/// Inner product of a row and a column.
template <class S>
S operator*(const RowVector<S>& x, const Vector<S>& y) {
  detail::require(x.size() == y.size(), Errc::ShapeMismatch, "inner product dimensions differ");
  S out = S::zero();
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * y[i];
  return out;
}

/// Outer product of a column and a row.
template <class S>
Matrix<S> operator*(const Vector<S>& x, const RowVector<S>& y) {
  Matrix<S> out(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = x[i] * y[j];
  return out;
}

template <class S>
Matrix<S> operator*(const S& c, const Matrix<S>& a) {
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

template <class S, bool R>
BasicVector<S, R> operator*(const S& c, const BasicVector<S, R>& x) {
  BasicVector<S, R> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

// -- order --------------------------------------------------------------

template <class S, bool R>
bool operator<=(const BasicVector<S, R>& a, const BasicVector<S, R>& b) {
  detail::require(a.size() == b.size(), Errc::ShapeMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

template <class S>
bool operator<=(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::ShapeMismatch,
                  "matrix shapes differ");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) <= b(i, j))) return false;
  return true;
}

template <class S, bool R>
bool approx_leq(const BasicVector<S, R>& a, const BasicVector<S, R>& b, double eps = kDefaultEps) {
  detail::require(a.size() == b.size(), Errc::ShapeMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_leq(a[i], b[i], eps)) return false;
  return true;
}

template <class S, bool R>
bool approx_equal(const BasicVector<S, R>& a, const BasicVector<S, R>& b, double eps = kDefaultEps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_equal(a[i], b[i], eps)) return false;
  return true;
}

template <class S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b, double eps = kDefaultEps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!approx_equal(a(i, j), b(i, j), eps)) return false;
  return true;
}

/// Entrywise minimum in the semifield order (the lattice meet).
template <class S, bool R>
BasicVector<S, R> meet(const BasicVector<S, R>& a, const BasicVector<S, R>& b) {
  detail::require(a.size() == b.size(), Errc::ShapeMismatch, "vector dimensions differ");
  BasicVector<S, R> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] <= b[i] ? a[i] : b[i];
  return out;
}

// -- conjugate transposition -------------------------------------------

/// x⁻: entrywise inverse of nonzero entries, zero kept, role flipped.
template <class S, bool R>
BasicVector<S, !R> conj(const BasicVector<S, R>& x) {
  detail::require(x.nonzero(), Errc::AllZeroVector, "conjugate of an all-zero vector");
  BasicVector<S, !R> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].is_zero() ? S::zero() : inv(x[i]);
  return out;
}

/// Conjugate transpose of a matrix: entrywise inverse of nonzero entries, transposed.
template <class S>
Matrix<S> conj(const Matrix<S>& a) {
  Matrix<S> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = a(i, j).is_zero() ? S::zero() : inv(a(i, j));
  return out;
}

template <class S>
Vector<S> constant_vector(std::size_t n, const S& c) {
  return Vector<S>(n, c);
}

}  // namespace tropt
