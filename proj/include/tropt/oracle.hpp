#pragma once

// Independent reference computations used to check the closed-form solvers.
// Everything here works over exact rationals and avoids the closed forms:
// minima come from exhaustive lattice search, spectral radii from explicit
// cycle enumeration, the S_k / T_k families from literal enumeration of
// exponent compositions and closures from Floyd-Warshall.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tropt/schedule.hpp"

namespace tropt::oracle {

using Q = MaxPlusQ;

/// Search box and lattice for grid_minimize. Coordinate i ranges over
/// [g_i, h_i] when both are finite, otherwise over center_i -+ radius
/// (intersected with whichever of g_i, h_i is finite).
struct GridSpec {
  std::optional<Rational> step;       // default 1/lcm(1..n+1)
  std::optional<Vector<Q>> center;    // required for coordinates without finite g and h
  Rational radius{3};
  std::uint64_t max_points = 10'000'000;
};

struct GridResult {
  Q minimum;
  Vector<Q> argmin;  // first strict improvement in lexicographic order
  std::uint64_t points = 0;
  std::uint64_t feasible = 0;
};

/// Step 1/lcm(1, ..., n+1): every root taken by the closed forms has an
/// index of at most n+1, so integer data keeps the optimum on this lattice.
Rational default_step(std::size_t n);

/// Exhaustive minimization of the problem's objective over the feasible
/// lattice points of the search box. Throws InvalidGrid when data is not a
/// multiple of the step, GridTooLarge above max_points and NoFeasiblePoint
/// when the box holds no feasible point.
GridResult grid_minimize(const OptProblem<Q>& problem, const GridSpec& grid);

/// Same search for a schedule, evaluating the flow times activity by activity.
GridResult grid_minimize_schedule(const ScheduleSpec<Q>& spec, const GridSpec& grid);

/// Flow-time objective evaluated straight from the activity model.
Q schedule_objective(const ScheduleSpec<Q>& spec, const Vector<Q>& x);

/// Maximum mean weight over elementary cycles (zero when acyclic); n <= 8.
Q cycle_mean_radius(const Matrix<Q>& a);

/// Nodes lying on some elementary cycle whose mean equals cycle_mean_radius.
std::vector<std::size_t> critical_nodes(const Matrix<Q>& a);

/// Literal sums over exponent compositions; n <= 5.
Matrix<Q> enumerate_s(const Matrix<Q>& a, const Matrix<Q>& b, std::size_t k);
Matrix<Q> enumerate_t(const Matrix<Q>& a, const Matrix<Q>& b, std::size_t k);

/// I + A + A^2 + ... by Floyd-Warshall longest paths; requires no positive cycle.
Matrix<Q> closure_floyd_warshall(const Matrix<Q>& a);

/// Random integer instances.
struct RandomOptions {
  int lo = -5;
  int hi = 5;
  double zero_probability = 0.3;
};

Matrix<Q> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        const RandomOptions& opt = {});
Vector<Q> random_vector(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt = {},
                        bool regular = false);
/// Square matrix whose entries are zeroed until Tr(B) <= 1.
Matrix<Q> random_bounded_cycles(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt = {});
/// Column-regular square matrix.
Matrix<Q> random_column_regular(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt = {});

/// A random problem of the given kind with integer data; for General the
/// constraints are feasible (Tr(B) <= 1 and h⁻B*g <= 1).
OptProblem<Q> random_problem(std::mt19937_64& rng, ProblemKind kind, std::size_t n,
                             const RandomOptions& opt = {});
ScheduleSpec<Q> random_schedule(std::mt19937_64& rng, std::size_t n, const RandomOptions& opt = {});

}  // namespace tropt::oracle
