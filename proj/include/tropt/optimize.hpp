#pragma once

// Closed-form solvers for minimax problems of the family
//
//   minimize   x⁻ A x + x⁻ p + q⁻ x + r
//   subject to B x + g <= x,  x <= h
//
// and its special cases. Each solver evaluates its own closed form; none
// delegates to another, so the specialization relations between them are
// checked by the test-suite rather than assumed.

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "tropt/linsolve.hpp"

namespace tropt {

enum class ProblemKind {
  Basic,                  // x⁻Ax
  ExtendedUnconstrained,  // x⁻Ax + x⁻p + q⁻x + r
  LinearConstrained,      // x⁻Ax  s.t. Bx + g <= x
  General,                // full objective s.t. Bx + g <= x, x <= h
  BoxConstrained,         // full objective s.t. g <= x <= h
  FixpointConstrained,    // full objective s.t. Bx <= x
};

std::string_view kind_name(ProblemKind kind) noexcept;
ProblemKind parse_kind(std::string_view name);

template <class S>
struct OptProblem {
  ProblemKind kind = ProblemKind::Basic;
  Matrix<S> a;
  std::optional<Matrix<S>> b;
  std::optional<Vector<S>> p, q, g, h;
  std::optional<S> r;

  std::size_t dim() const { return a.rows(); }
};

template <class S>
struct OptResult {
  S minimum;
  SolutionSet<S> solutions;
  Vector<S> canonical;
  std::vector<std::string> warnings;
};

/// The five partial sums whose total is the minimum of the general problem.
template <class S>
struct GeneralTerms {
  S trace_sum;   // sum_{k=1..n}   tr^{1/k}(S_k)
  S hg_sum;      // sum_{k=1..n-1} (h⁻T_k g)^{1/k}
  S mixed_sum;   // sum_{k=0..n-1} (q⁻T_k g + h⁻T_k p)^{1/(k+1)}
  S qp_sum;      // sum_{k=0..n-1} (q⁻T_k p)^{1/(k+2)}
  S r;
  S total() const { return trace_sum + hg_sum + mixed_sum + qp_sum + r; }
};

namespace detail {

inline Rational unit_fraction(std::size_t k) { return Rational(1, static_cast<std::int64_t>(k)); }

template <class S>
const Matrix<S>& need(const std::optional<Matrix<S>>& m, const char* name, ProblemKind kind) {
  if (!m) {
    throw Error(Errc::InvalidProblem,
                std::string(name) + " is required for kind " + std::string(kind_name(kind)));
  }
  return *m;
}

template <class S>
void check_dim(const Vector<S>& v, std::size_t n, const char* name) {
  require(v.size() == n, Errc::ShapeMismatch,
          std::string(name) + " has dimension " + std::to_string(v.size()) + ", expected " +
              std::to_string(n));
}

template <class S>
void check_square_pair(const Matrix<S>& a, const Matrix<S>& b) {
  require_square(a, "A");
  require(b.rows() == a.rows() && b.cols() == a.cols(), Errc::ShapeMismatch,
          "B must have the shape of A");
}

template <class S>
void require_regular(const Vector<S>& v, const char* name) {
  require(v.regular(), Errc::NotRegularVector, std::string(name) + " must be regular");
}

template <class S>
S require_positive_radius(const Matrix<S>& a) {
  S lambda = spectral_radius(a);
  require(!lambda.is_zero(), Errc::ZeroSpectralRadius, "spectral radius of A is zero");
  return lambda;
}

template <class S>
void require_tr_b(const Matrix<S>& b, double eps) {
  const S tr = big_tr(b);
  if (!approx_leq(tr, S::one(), eps)) {
    throw Error(Errc::InfeasibleConstraints, "Tr(B) = " + tr.to_string() + " exceeds one");
  }
}

template <class S>
S lower_estimate(const S& lambda, const RowVector<S>& qc, const Vector<S>& p, const S& r) {
  S est = lambda + pow(qc * p, Rational(1, 2)) + r;
  if (est.is_zero()) {
    throw Error(Errc::DegenerateProblem, "lambda + (q⁻p)^(1/2) + r is zero");
  }
  return est;
}

/// Assembles the result, widening an upper bound that float rounding pushed
/// below the lower one.
template <class S>
OptResult<S> finish(const S& minimum, Matrix<S> generator, Vector<S> lower,
                    std::type_identity_t<std::optional<Vector<S>>> upper) {
  OptResult<S> out{minimum, SolutionSet<S>{std::move(generator), std::move(lower),
                                           std::move(upper), minimum},
                   Vector<S>{}, {}};
  if (auto& ub = out.solutions.upper) {
    const auto& lb = out.solutions.lower;
    for (std::size_t i = 0; i < lb.size(); ++i) {
      if (!(lb[i] <= (*ub)[i])) {
        out.warnings.push_back("upper bound of u[" + std::to_string(i) + "] = " +
                               (*ub)[i].to_string() + " below lower bound " + lb[i].to_string() +
                               "; widened");
        (*ub)[i] = lb[i];
      }
    }
  }
  out.canonical = out.solutions.representative();
  return out;
}

}  // namespace detail

// -- objective and feasibility -----------------------------------------

template <class S>
void validate(const OptProblem<S>& pr) {
  detail::require_square(pr.a, "A");
  const std::size_t n = pr.dim();
  auto uses = [&](bool used, bool present, const char* name) {
    if (present && !used) {
      throw Error(Errc::InvalidProblem, std::string(name) + " is not used by kind " +
                                            std::string(kind_name(pr.kind)));
    }
  };
  const bool has_b = pr.kind == ProblemKind::LinearConstrained ||
                     pr.kind == ProblemKind::General ||
                     pr.kind == ProblemKind::FixpointConstrained;
  const bool has_pqr = pr.kind == ProblemKind::ExtendedUnconstrained ||
                       pr.kind == ProblemKind::General ||
                       pr.kind == ProblemKind::BoxConstrained ||
                       pr.kind == ProblemKind::FixpointConstrained;
  const bool has_g = pr.kind == ProblemKind::LinearConstrained ||
                     pr.kind == ProblemKind::General || pr.kind == ProblemKind::BoxConstrained;
  const bool has_h = pr.kind == ProblemKind::General || pr.kind == ProblemKind::BoxConstrained;
  uses(has_b, pr.b.has_value(), "B");
  uses(has_pqr, pr.p.has_value(), "p");
  uses(has_pqr, pr.q.has_value(), "q");
  uses(has_pqr, pr.r.has_value(), "r");
  uses(has_g, pr.g.has_value(), "g");
  uses(has_h, pr.h.has_value(), "h");
  if (has_b) detail::check_square_pair(pr.a, detail::need(pr.b, "B", pr.kind));
  if (has_pqr && !pr.q) throw Error(Errc::InvalidProblem, "q is required");
  if (has_h && !pr.h) throw Error(Errc::InvalidProblem, "h is required");
  if (pr.p) detail::check_dim(*pr.p, n, "p");
  if (pr.q) detail::check_dim(*pr.q, n, "q");
  if (pr.g) detail::check_dim(*pr.g, n, "g");
  if (pr.h) detail::check_dim(*pr.h, n, "h");
}

/// Objective of the problem kind at x; absent terms contribute zero.
template <class S>
S objective_value(const OptProblem<S>& pr, const Vector<S>& x) {
  detail::require(x.size() == pr.dim(), Errc::ShapeMismatch, "x has the wrong dimension");
  detail::require_regular(x, "x");
  const RowVector<S> xc = conj(x);
  S value = xc * (pr.a * x);
  if (pr.p) value += xc * *pr.p;
  if (pr.q) value += conj(*pr.q) * x;
  if (pr.r) value += *pr.r;
  return value;
}

/// Constraint check for the kind; eps slack in float mode.
template <class S>
bool satisfies_constraints(const OptProblem<S>& pr, const Vector<S>& x,
                           double eps = kDefaultEps) {
  if (x.size() != pr.dim() || !x.regular()) return false;
  Vector<S> below(x.size());
  if (pr.b) below = *pr.b * x;
  if (pr.g) below = below + *pr.g;
  if (!approx_leq(below, x, eps)) return false;
  if (pr.h && !approx_leq(x, *pr.h, eps)) return false;
  return true;
}

// -- solvers ------------------------------------------------------------

/// minimize x⁻Ax: the minimum is the spectral radius lambda and the solutions
/// are x = (lambda⁻¹A)* u for any regular u.
template <class S>
OptResult<S> minimize_basic(const Matrix<S>& a) {
  detail::require_square(a, "A");
  const S lambda = detail::require_positive_radius(a);
  const std::size_t n = a.rows();
  return detail::finish(lambda, kleene_star(inv(lambda) * a), Vector<S>(n), std::nullopt);
}

/// minimize x⁻Ax + x⁻p + q⁻x + r with
///   mu = lambda + sum_{m=0..n-1} (q⁻A^m p)^{1/(m+2)} + r,
///   x = (mu⁻¹A)* u,  mu⁻¹p <= u <= mu (q⁻(mu⁻¹A)*)⁻.
template <class S>
OptResult<S> minimize_extended(const Matrix<S>& a, const Vector<S>& p, const Vector<S>& q,
                               const S& r) {
  detail::require_square(a, "A");
  const std::size_t n = a.rows();
  detail::check_dim(p, n, "p");
  detail::check_dim(q, n, "q");
  detail::require_regular(q, "q");
  const S lambda = detail::require_positive_radius(a);
  const RowVector<S> qc = conj(q);
  S mu = lambda + r;
  RowVector<S> qa = qc;  // q⁻A^m
  for (std::size_t m = 0; m < n; ++m) {
    mu += pow(qa * p, detail::unit_fraction(m + 2));
    qa = qa * a;
  }
  const S mu_inv = inv(mu);
  Matrix<S> g = kleene_star(mu_inv * a);
  Vector<S> upper = mu * conj(qc * g);
  return detail::finish(mu, std::move(g), mu_inv * p, std::move(upper));
}

/// minimize x⁻Ax subject to Bx + g <= x:
///   mu = lambda + sum_{k=1..n-1} sum_{1 <= i_1+...+i_k <= n-k} tr^{1/k}(A B^i_1 ... A B^i_k),
///   x = (mu⁻¹A + B)* u,  u >= g.
/// The inner sums are read off the traces of S_k, whose only extra term
/// (all exponents zero) is A^k and is already covered by lambda.
template <class S>
OptResult<S> minimize_linear_constrained(const Matrix<S>& a, const Matrix<S>& b,
                                         const Vector<S>& g, double eps = kDefaultEps) {
  detail::check_square_pair(a, b);
  const std::size_t n = a.rows();
  detail::check_dim(g, n, "g");
  detail::require_tr_b(b, eps);
  const S lambda = detail::require_positive_radius(a);
  const SumFamilies<S> f = sum_families(a, b);
  S mu = lambda;
  for (std::size_t k = 1; k < n; ++k) mu += pow(trace(f.s[k]), detail::unit_fraction(k));
  return detail::finish(mu, kleene_star(inv(mu) * a + b), g, std::nullopt);
}

/// The five partial sums for the general problem, with q and h given by
/// their conjugate rows. Zero entries of hc mean no upper bound from h.
template <class S>
GeneralTerms<S> general_terms(const Matrix<S>& a, const Matrix<S>& b, const Vector<S>& p,
                              const RowVector<S>& qc, const Vector<S>& g, const RowVector<S>& hc,
                              const S& r) {
  const std::size_t n = a.rows();
  const SumFamilies<S> f = sum_families(a, b);
  GeneralTerms<S> t{S::zero(), S::zero(), S::zero(), S::zero(), r};
  for (std::size_t k = 1; k <= n; ++k) t.trace_sum += pow(trace(f.s[k]), detail::unit_fraction(k));
  for (std::size_t k = 0; k < n; ++k) {
    const RowVector<S> qt = qc * f.t[k];
    const RowVector<S> ht = hc * f.t[k];
    if (k >= 1) t.hg_sum += pow(ht * g, detail::unit_fraction(k));
    t.mixed_sum += pow(qt * g + ht * p, detail::unit_fraction(k + 1));
    t.qp_sum += pow(qt * p, detail::unit_fraction(k + 2));
  }
  return t;
}

/// General problem with q⁻ and h⁻ supplied as rows. qc must be regular; hc
/// may contain zeros (an all-zero hc removes the upper bound x <= h).
template <class S>
OptResult<S> minimize_general(const Matrix<S>& a, const Matrix<S>& b, const Vector<S>& p,
                              const RowVector<S>& qc, const Vector<S>& g, const RowVector<S>& hc,
                              const S& r, double eps = kDefaultEps) {
  detail::check_square_pair(a, b);
  const std::size_t n = a.rows();
  detail::check_dim(p, n, "p");
  detail::check_dim(g, n, "g");
  detail::require(qc.size() == n && hc.size() == n, Errc::ShapeMismatch,
                  "q and h must match the order of A");
  detail::require(qc.regular(), Errc::NotRegularVector, "q must be regular");
  detail::require_tr_b(b, eps);
  const Matrix<S> b_star = kleene_star(b);
  const S hbg = hc * (b_star * g);
  if (!approx_leq(hbg, S::one(), eps)) {
    throw Error(Errc::InfeasibleConstraints, "h⁻B*g = " + hbg.to_string() + " exceeds one");
  }
  detail::lower_estimate(spectral_radius(a), qc, p, r);
  const S theta = general_terms(a, b, p, qc, g, hc, r).total();
  const S theta_inv = inv(theta);
  Matrix<S> gen = kleene_star(theta_inv * a + b);
  Vector<S> lower = theta_inv * p + g;
  Vector<S> upper = conj((theta_inv * qc + hc) * gen);
  return detail::finish(theta, std::move(gen), std::move(lower), std::move(upper));
}

/// minimize x⁻Ax + x⁻p + q⁻x + r subject to Bx + g <= x, x <= h (q, h regular).
template <class S>
OptResult<S> minimize_general(const Matrix<S>& a, const Matrix<S>& b, const Vector<S>& p,
                              const Vector<S>& q, const Vector<S>& g, const Vector<S>& h,
                              const S& r, double eps = kDefaultEps) {
  detail::check_dim(q, a.rows(), "q");
  detail::check_dim(h, a.rows(), "h");
  detail::require_regular(q, "q");
  detail::require_regular(h, "h");
  return minimize_general(a, b, p, conj(q), g, conj(h), r, eps);
}

/// minimize x⁻Ax + x⁻p + q⁻x + r subject to g <= x <= h:
///   theta = lambda + sum_{k=1..n-1} (h⁻A^k g)^{1/k}
///         + sum_{k=0..n-1} (q⁻A^k g + h⁻A^k p)^{1/(k+1)}
///         + sum_{k=0..n-1} (q⁻A^k p)^{1/(k+2)} + r.
template <class S>
OptResult<S> minimize_box_constrained(const Matrix<S>& a, const Vector<S>& p, const Vector<S>& q,
                                      const Vector<S>& g, const Vector<S>& h, const S& r,
                                      double eps = kDefaultEps) {
  detail::require_square(a, "A");
  const std::size_t n = a.rows();
  detail::check_dim(p, n, "p");
  detail::check_dim(q, n, "q");
  detail::check_dim(g, n, "g");
  detail::check_dim(h, n, "h");
  detail::require_regular(q, "q");
  detail::require_regular(h, "h");
  const RowVector<S> qc = conj(q);
  const RowVector<S> hc = conj(h);
  const S hg = hc * g;
  if (!approx_leq(hg, S::one(), eps)) {
    throw Error(Errc::InfeasibleConstraints, "h⁻g = " + hg.to_string() + " exceeds one");
  }
  const S lambda = spectral_radius(a);
  detail::lower_estimate(lambda, qc, p, r);
  S theta = lambda + r;
  RowVector<S> qa = qc;  // q⁻A^k
  RowVector<S> ha = hc;  // h⁻A^k
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= 1) theta += pow(ha * g, detail::unit_fraction(k));
    theta += pow(qa * g + ha * p, detail::unit_fraction(k + 1));
    theta += pow(qa * p, detail::unit_fraction(k + 2));
    qa = qa * a;
    ha = ha * a;
  }
  const S theta_inv = inv(theta);
  Matrix<S> gen = kleene_star(theta_inv * a);
  Vector<S> lower = theta_inv * p + g;
  Vector<S> upper = conj((theta_inv * qc + hc) * gen);
  return detail::finish(theta, std::move(gen), std::move(lower), std::move(upper));
}

/// minimize x⁻Ax + x⁻p + q⁻x + r subject to Bx <= x:
///   theta = sum_{k=1..n} tr^{1/k}(S_k) + sum_{k=0..n-1} (q⁻T_k p)^{1/(k+2)} + r,
///   x = (theta⁻¹A + B)* u,  theta⁻¹p <= u <= theta (q⁻(theta⁻¹A + B)*)⁻.
template <class S>
OptResult<S> minimize_fixpoint_constrained(const Matrix<S>& a, const Matrix<S>& b,
                                           const Vector<S>& p, const Vector<S>& q, const S& r,
                                           double eps = kDefaultEps) {
  detail::check_square_pair(a, b);
  const std::size_t n = a.rows();
  detail::check_dim(p, n, "p");
  detail::check_dim(q, n, "q");
  detail::require_regular(q, "q");
  detail::require_tr_b(b, eps);
  const RowVector<S> qc = conj(q);
  detail::lower_estimate(spectral_radius(a), qc, p, r);
  const SumFamilies<S> f = sum_families(a, b);
  S theta = r;
  for (std::size_t k = 1; k <= n; ++k) theta += pow(trace(f.s[k]), detail::unit_fraction(k));
  for (std::size_t k = 0; k < n; ++k) theta += pow(qc * f.t[k] * p, detail::unit_fraction(k + 2));
  const S theta_inv = inv(theta);
  Matrix<S> gen = kleene_star(theta_inv * a + b);
  Vector<S> upper = theta * conj(qc * gen);
  return detail::finish(theta, std::move(gen), theta_inv * p, std::move(upper));
}

/// Dispatches on the problem kind. Absent p, g and r read as zero.
template <class S>
OptResult<S> solve(const OptProblem<S>& pr, double eps = kDefaultEps) {
  validate(pr);
  const std::size_t n = pr.dim();
  const Vector<S> zero_vec(n);
  const Vector<S>& p = pr.p ? *pr.p : zero_vec;
  const Vector<S>& g = pr.g ? *pr.g : zero_vec;
  const S r = pr.r.value_or(S::zero());
  switch (pr.kind) {
    case ProblemKind::Basic:
      return minimize_basic(pr.a);
    case ProblemKind::ExtendedUnconstrained:
      return minimize_extended(pr.a, p, *pr.q, r);
    case ProblemKind::LinearConstrained:
      return minimize_linear_constrained(pr.a, *pr.b, g, eps);
    case ProblemKind::General:
      return minimize_general(pr.a, *pr.b, p, *pr.q, g, *pr.h, r, eps);
    case ProblemKind::BoxConstrained:
      return minimize_box_constrained(pr.a, p, *pr.q, g, *pr.h, r, eps);
    case ProblemKind::FixpointConstrained:
      return minimize_fixpoint_constrained(pr.a, *pr.b, p, *pr.q, r, eps);
  }
  throw Error(Errc::InvalidProblem, "unknown problem kind");
}

// -- verification ---------------------------------------------------------

enum class VerifyStatus {
  Ok,
  ShapeMismatch,
  NotRegular,
  ConstraintViolated,
  ObjectiveMismatch,
  NotInSolutionSet,
};

std::string_view verify_status_name(VerifyStatus s) noexcept;

struct Verification {
  VerifyStatus status = VerifyStatus::Ok;
  std::string detail;
  bool ok() const { return status == VerifyStatus::Ok; }
  explicit operator bool() const { return ok(); }
};

/// Checks that x is a regular feasible point attaining the reported minimum
/// and lying in the reported solution family.
template <class S>
Verification verify_solution(const OptProblem<S>& pr, const OptResult<S>& res, const Vector<S>& x,
                             double eps = kDefaultEps) {
  if (x.size() != pr.dim() || res.solutions.dim() != pr.dim()) {
    return {VerifyStatus::ShapeMismatch, "dimension mismatch"};
  }
  if (!x.regular()) return {VerifyStatus::NotRegular, "x has zero entries"};
  if (!satisfies_constraints(pr, x, eps)) {
    return {VerifyStatus::ConstraintViolated, "x violates the constraints"};
  }
  const S value = objective_value(pr, x);
  if (!approx_equal(value, res.minimum, eps)) {
    return {VerifyStatus::ObjectiveMismatch,
            "objective " + value.to_string() + " != minimum " + res.minimum.to_string()};
  }
  if (!res.solutions.contains(x, eps)) {
    return {VerifyStatus::NotInSolutionSet, "x is not generated by the solution family"};
  }
  return {};
}

}  // namespace tropt
