#pragma once

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "tropt/oracle.hpp"

namespace tropt::test {

using Q = MaxPlusQ;
using D = MaxPlusD;
using MQ = Matrix<Q>;
using VQ = Vector<Q>;
using RQ = RowVector<Q>;

inline const Q Z = Q::zero();

/// The three-activity worked example used across the suites.
struct Example {
  MQ a{{4, 0, Z}, {2, 3, 1}, {1, 1, 3}};
  MQ b{{Z, -1, 1}, {0, Z, 2}, {-1, Z, Z}};
  VQ p{4, 4, 3};
  VQ q{3, 2, 1};
  VQ g{0, 0, 1};
  VQ h{2, 3, 3};

  ScheduleSpec<Q> spec() const { return {{"1", "2", "3"}, a, b, g, h, q, p}; }
};

/// Same data in float mode.
inline MaxPlusD to_float(const Q& x) { return x.is_zero() ? D::zero() : D(x.to_double()); }

template <bool Row>
BasicVector<D, Row> to_float(const BasicVector<Q, Row>& v) {
  BasicVector<D, Row> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_float(v[i]);
  return out;
}

inline Matrix<D> to_float(const MQ& m) {
  Matrix<D> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_float(m(i, j));
  return out;
}

inline ScheduleSpec<D> to_float(const ScheduleSpec<Q>& s) {
  return {s.activities,          to_float(s.start_finish), to_float(s.start_start),
          to_float(s.earliest_start), to_float(s.latest_start), to_float(s.window_lower),
          to_float(s.window_upper)};
}

inline Rational rat(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

/// Deterministic generator seeded per test so failures reproduce.
inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0x7a11ab1e ^ salt); }

/// Random regular vector with entries in [lo, hi].
inline VQ random_regular(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
  return oracle::random_vector(rng, n, {lo, hi, 0.0}, true);
}

/// Sum of B^{i0} A B^{i1} ... A B^{ik} over exponents with i0 + ... + ik equal
/// to `total` (or at most `total` when `up_to`). Without `lead`, i0 is fixed
/// at zero. Products are formed literally from matrix powers.
inline MQ composition_sum(const MQ& a, const MQ& b, std::size_t k, std::size_t total, bool up_to, bool lead) {
  const std::size_t n = a.rows();
  MQ sum(n, n);
  std::vector<std::size_t> e(k + 1, 0);
  const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (pos == e.size()) {
      if (!up_to && used != total) return;
      MQ w = mat_pow(b, static_cast<unsigned>(e[0]));
      for (std::size_t j = 1; j <= k; ++j) w = w * a * mat_pow(b, static_cast<unsigned>(e[j]));
      sum = sum + w;
      return;
    }
    const std::size_t hi = (pos == 0 && !lead) ? 0 : total - used;
    for (std::size_t i = 0; i <= hi; ++i) {
      e[pos] = i;
      rec(pos + 1, used + i);
    }
  };
  rec(0, 0);
  return sum;
}

/// Both sides of (A + B)^m = sum_k sum_{i0+..+ik=m-k} B^{i0} A B^{i1} ... A B^{ik} + B^m.
inline std::pair<MQ, MQ> binomial_sides(const MQ& a, const MQ& b, std::size_t m) {
  MQ rhs = mat_pow(b, static_cast<unsigned>(m));
  for (std::size_t k = 1; k <= m; ++k) rhs = rhs + composition_sum(a, b, k, m - k, false, true);
  return {mat_pow(a + b, static_cast<unsigned>(m)), rhs};
}

/// Both sides of the accumulated identity over powers 1..m.
inline std::pair<MQ, MQ> accumulated_binomial_sides(const MQ& a, const MQ& b, std::size_t m) {
  MQ lhs(a.rows(), a.rows()), rhs(a.rows(), a.rows());
  for (std::size_t k = 1; k <= m; ++k) {
    lhs = lhs + mat_pow(a + b, static_cast<unsigned>(k));
    rhs = rhs + composition_sum(a, b, k, m - k, true, true) + mat_pow(b, static_cast<unsigned>(k));
  }
  return {lhs, rhs};
}

/// Both sides of the trace form, where the leading B power is absorbed.
inline std::pair<Q, Q> trace_binomial_sides(const MQ& a, const MQ& b, std::size_t m) {
  Q lhs = Q::zero(), rhs = Q::zero();
  for (std::size_t k = 1; k <= m; ++k) {
    lhs += trace(mat_pow(a + b, static_cast<unsigned>(k)));
    rhs += trace(composition_sum(a, b, k, m - k, true, false)) + trace(mat_pow(b, static_cast<unsigned>(k)));
  }
  return {lhs, rhs};
}

}  // namespace tropt::test
