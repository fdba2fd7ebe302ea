#pragma once

// Project scheduling with start-finish and start-start lags, early/late
// start dates and mandatory time windows. An activity i starts at x_i and
// completes at y_i = max_j (a_ij + x_j); its window [q_i, p_i] stretches the
// occupied interval to [min(x_i, q_i), max(y_i, p_i)]. The schedule minimizes
// the largest such flow time subject to x_i >= b_ij + x_j and g_i <= x_i <= h_i.

#include <optional>
#include <string>
#include <vector>

#include "tropt/optimize.hpp"

namespace tropt {

template <class S>
struct ScheduleSpec {
  std::vector<std::string> activities;
  Matrix<S> start_finish;  // a_ij: initiation of j to completion of i
  Matrix<S> start_start;   // b_ij: initiation of j to initiation of i
  Vector<S> earliest_start;  // g
  Vector<S> latest_start;    // h
  Vector<S> window_lower;    // q
  Vector<S> window_upper;    // p

  std::size_t size() const { return start_finish.rows(); }
};

/// Every intermediate quantity of the closed-form solution, kept for
/// inspection. Index k of each per-k vector corresponds to the k in the
/// formula; entries outside a sum's range are zero.
template <class S>
struct ScheduleLedger {
  std::vector<Matrix<S>> a_powers;  // A^0..A^n
  std::vector<Matrix<S>> b_powers;  // B^0..B^n
  S tr_b;
  Matrix<S> b_star;
  RowVector<S> h_b_star;
  S h_b_star_g;
  SumFamilies<S> families;
  std::vector<RowVector<S>> h_t;  // h⁻T_k, k = 0..n-1
  std::vector<RowVector<S>> q_s;  // q⁻S_k, k = 0..n
  std::vector<S> h_t_g;           // h⁻T_k g, k = 0..n-1
  std::vector<S> h_t_p;           // h⁻T_k p, k = 0..n-1
  std::vector<S> q_s_g;           // q⁻S_k g, k = 0..n
  std::vector<S> q_s_p;           // q⁻S_k p, k = 0..n
  S trace_sum;  // sum_{k=1..n}   tr^{1/k}(S_k)
  S hg_sum;     // sum_{k=1..n-1} (h⁻T_k g)^{1/k}
  S qg_sum;     // sum_{k=1..n}   (q⁻S_k g)^{1/k}
  S hp_sum;     // sum_{k=0..n-1} (h⁻T_k p)^{1/(k+1)}
  S qp_sum;     // sum_{k=0..n}   (q⁻S_k p)^{1/(k+1)}
  RowVector<S> theta_q_a;     // theta⁻¹q⁻A
  RowVector<S> upper_row;     // theta⁻¹q⁻A + h⁻
  Matrix<S> closure_base;     // theta⁻¹A + B
};

template <class S>
struct ScheduleResult {
  S theta;
  Vector<S> initiation;       // x
  Vector<S> completion;       // y = A x
  Vector<S> adjusted_start;   // s_i = min(x_i, q_i)
  Vector<S> adjusted_finish;  // t_i = max(y_i, p_i)
  Vector<S> flow_times;       // t_i - s_i
  std::vector<std::size_t> critical;  // activities whose flow time equals theta
  SolutionSet<S> solutions;
  ScheduleLedger<S> ledger;
  std::vector<std::string> warnings;
};

/// x = direction * v with v in [v_lower, v_upper], when the generator has
/// proportional columns.
template <class S>
struct SolutionLine {
  Vector<S> direction;
  RowVector<S> coefficients;  // generator = direction * coefficients
  S v_lower;
  S v_upper;
  bool unique(double eps = kDefaultEps) const { return approx_equal(v_lower, v_upper, eps); }
};

/// Throws SpecValidation listing every violated invariant.
template <class S>
void validate_schedule(const ScheduleSpec<S>& spec) {
  std::vector<std::string> failures;
  const std::size_t n = spec.size();
  if (n == 0) failures.emplace_back("no activities");
  if (!spec.start_finish.square()) failures.emplace_back("startFinish is not square");
  if (spec.start_start.rows() != n || spec.start_start.cols() != n) {
    failures.emplace_back("startStart must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!spec.activities.empty() && spec.activities.size() != n) {
    failures.emplace_back("activities lists " + std::to_string(spec.activities.size()) +
                          " names for " + std::to_string(n) + " activities");
  }
  auto vec = [&](const Vector<S>& v, const char* name, bool regular) {
    if (v.size() != n) {
      failures.emplace_back(std::string(name) + " has dimension " + std::to_string(v.size()));
    } else if (regular && !v.regular()) {
      failures.emplace_back(std::string(name) + " must be finite for every activity");
    }
  };
  vec(spec.earliest_start, "earliestStart", false);
  vec(spec.latest_start, "latestStart", true);
  vec(spec.window_lower, "windowLower", true);
  vec(spec.window_upper, "windowUpper", true);
  if (n > 0 && spec.start_finish.square() && !spec.start_finish.column_regular()) {
    failures.emplace_back("startFinish is not column-regular (some activity has no start-finish lag)");
  }
  if (failures.empty()) return;
  std::string msg;
  for (const auto& f : failures) msg += (msg.empty() ? "" : "; ") + f;
  throw Error(Errc::SpecValidation, msg);
}

/// The equivalent general problem: q⁻ replaced by q⁻A and r = q⁻p.
template <class S>
OptProblem<S> build_problem(const ScheduleSpec<S>& spec) {
  validate_schedule(spec);
  const RowVector<S> qc = conj(spec.window_lower);
  OptProblem<S> pr;
  pr.kind = ProblemKind::General;
  pr.a = spec.start_finish;
  pr.b = spec.start_start;
  pr.p = spec.window_upper;
  pr.q = conj(qc * spec.start_finish);
  pr.g = spec.earliest_start;
  pr.h = spec.latest_start;
  pr.r = qc * spec.window_upper;
  return pr;
}

/// Maximum flow time of a schedule x, evaluated from the activity model.
template <class S>
S max_flow_time(const ScheduleSpec<S>& spec, const Vector<S>& x) {
  detail::require(x.size() == spec.size() && x.regular(), Errc::NotRegularVector,
                  "x must be a regular vector of start times");
  const Vector<S> s = conj(conj(x) + conj(spec.window_lower));
  const Vector<S> t = spec.start_finish * x + spec.window_upper;
  return conj(s) * t;
}

template <class S>
ScheduleResult<S> solve_schedule(const ScheduleSpec<S>& spec, double eps = kDefaultEps) {
  validate_schedule(spec);
  const std::size_t n = spec.size();
  const Matrix<S>& a = spec.start_finish;
  const Matrix<S>& b = spec.start_start;
  const Vector<S>& g = spec.earliest_start;
  const Vector<S>& p = spec.window_upper;
  const RowVector<S> hc = conj(spec.latest_start);
  const RowVector<S> qc = conj(spec.window_lower);

  ScheduleResult<S> res;
  ScheduleLedger<S>& led = res.ledger;
  led.a_powers = power_sequence(a, n);
  led.b_powers = power_sequence(b, n);
  led.tr_b = big_tr(b);
  if (!approx_leq(led.tr_b, S::one(), eps)) {
    throw Error(Errc::InfeasibleSchedule,
                "Tr(B) = " + led.tr_b.to_string() + " exceeds one: start-start lags form a positive cycle");
  }
  led.b_star = kleene_star(b);
  led.h_b_star = hc * led.b_star;
  led.h_b_star_g = led.h_b_star * g;
  if (!approx_leq(led.h_b_star_g, S::one(), eps)) {
    throw Error(Errc::InfeasibleSchedule,
                "h⁻B*g = " + led.h_b_star_g.to_string() +
                    " exceeds one: early start dates and start-start lags conflict with late start dates");
  }

  led.families = sum_families(a, b);
  const auto& fs = led.families.s;
  const auto& ft = led.families.t;
  led.trace_sum = led.hg_sum = led.qg_sum = led.hp_sum = led.qp_sum = S::zero();
  for (std::size_t k = 0; k < n; ++k) {
    led.h_t.push_back(hc * ft[k]);
    led.h_t_g.push_back(led.h_t.back() * g);
    led.h_t_p.push_back(led.h_t.back() * p);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    led.q_s.push_back(qc * fs[k]);
    led.q_s_g.push_back(led.q_s.back() * g);
    led.q_s_p.push_back(led.q_s.back() * p);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    led.trace_sum += pow(trace(fs[k]), detail::unit_fraction(k));
    led.qg_sum += pow(led.q_s_g[k], detail::unit_fraction(k));
  }
  for (std::size_t k = 1; k < n; ++k) led.hg_sum += pow(led.h_t_g[k], detail::unit_fraction(k));
  for (std::size_t k = 0; k < n; ++k) led.hp_sum += pow(led.h_t_p[k], detail::unit_fraction(k + 1));
  for (std::size_t k = 0; k <= n; ++k) led.qp_sum += pow(led.q_s_p[k], detail::unit_fraction(k + 1));

  res.theta = led.trace_sum + led.hg_sum + led.qg_sum + led.hp_sum + led.qp_sum;
  const S theta_inv = inv(res.theta);
  led.theta_q_a = theta_inv * (qc * a);
  led.upper_row = led.theta_q_a + hc;
  led.closure_base = theta_inv * a + b;
  Matrix<S> gen = kleene_star(led.closure_base);
  Vector<S> upper = conj(led.upper_row * gen);
  OptResult<S> opt = detail::finish(res.theta, std::move(gen), theta_inv * p + g, std::move(upper));
  res.solutions = std::move(opt.solutions);
  res.warnings = std::move(opt.warnings);

  res.initiation = res.solutions.generator * res.solutions.lower;
  res.completion = a * res.initiation;
  res.adjusted_start = conj(conj(res.initiation) + qc);
  res.adjusted_finish = res.completion + p;
  res.flow_times = Vector<S>(n);
  for (std::size_t i = 0; i < n; ++i) {
    res.flow_times[i] = inv(res.adjusted_start[i]) * res.adjusted_finish[i];
    if (approx_equal(res.flow_times[i], res.theta, eps)) res.critical.push_back(i);
  }
  return res;
}

/// Rank-one view of the solution family: when every column of the generator
/// is a multiple of one direction, x = direction * v over a scalar interval.
template <class S>
std::optional<SolutionLine<S>> collapse_solution_line(const SolutionSet<S>& set,
                                                      double eps = kDefaultEps) {
  const Matrix<S>& gen = set.generator;
  if (gen.rows() == 0 || !set.upper || !gen.column_regular()) return std::nullopt;
  const Vector<S> direction = gen * Vector<S>(gen.cols(), S::one());
  if (!direction.regular()) return std::nullopt;
  const RowVector<S> coeff = conj(direction) * gen;
  if (!approx_equal(direction * coeff, gen, eps)) return std::nullopt;
  return SolutionLine<S>{direction, coeff, coeff * set.lower, coeff * *set.upper};
}

template <class S>
std::optional<SolutionLine<S>> collapse_solution_line(const ScheduleResult<S>& res,
                                                      double eps = kDefaultEps) {
  return collapse_solution_line(res.solutions, eps);
}

}  // namespace tropt
