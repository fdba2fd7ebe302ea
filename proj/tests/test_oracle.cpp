#include <gtest/gtest.h>

#include "support.hpp"

namespace tropt::test {
namespace {

const Example ex;

TEST(Grid, DefaultStep) {
  EXPECT_EQ(oracle::default_step(1), rat(1, 2));
  EXPECT_EQ(oracle::default_step(2), rat(1, 6));
  EXPECT_EQ(oracle::default_step(3), rat(1, 12));
}

TEST(Grid, WorkedScheduleOptimum) {
  const auto res = oracle::grid_minimize_schedule(ex.spec(), {});
  EXPECT_EQ(res.minimum, Q(4));
  EXPECT_EQ(res.argmin, (VQ{2, 3, 1}));
  EXPECT_GT(res.feasible, 0u);
  const auto via_problem = oracle::grid_minimize(build_problem(ex.spec()), {});
  EXPECT_EQ(via_problem.minimum, Q(4));
}

TEST(Grid, BasicAroundCenter) {
  OptProblem<Q> pr;
  pr.a = ex.a;
  oracle::GridSpec grid;
  grid.center = VQ{2, 3, 1};
  grid.radius = rat(1);
  grid.step = rat(1, 4);
  const auto res = oracle::grid_minimize(pr, grid);
  EXPECT_EQ(res.minimum, Q(4));
  EXPECT_EQ(res.points, 9u * 9u * 9u);
}

TEST(Grid, Errors) {
  auto spec = ex.spec();
  spec.earliest_start = VQ{0, 0, 4};
  try {
    oracle::grid_minimize_schedule(spec, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoFeasiblePoint);
  }

  oracle::GridSpec coarse;
  coarse.step = rat(1, 3);
  spec = ex.spec();
  spec.window_upper = VQ{Q(rat(1, 2)), 4, 3};
  try {
    oracle::grid_minimize_schedule(spec, coarse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidGrid);
  }

  oracle::GridSpec tiny;
  tiny.max_points = 10;
  try {
    oracle::grid_minimize_schedule(ex.spec(), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GridTooLarge);
  }

  OptProblem<Q> pr;
  pr.a = ex.a;
  EXPECT_THROW(oracle::grid_minimize(pr, {}), Error);  // no center for unbounded coordinates
}

TEST(CycleMean, Examples) {
  EXPECT_EQ(oracle::cycle_mean_radius(ex.a), Q(4));
  EXPECT_EQ(oracle::cycle_mean_radius(ex.b), Q(0));
  EXPECT_TRUE(oracle::cycle_mean_radius(MQ{{Z, 1}, {Z, Z}}).is_zero());
  EXPECT_EQ(oracle::cycle_mean_radius(MQ{{1, Z, Z}, {Z, -2, Z}, {Z, Z, 7}}), Q(7));
  EXPECT_EQ(oracle::critical_nodes(ex.a), (std::vector<std::size_t>{0}));
  EXPECT_THROW(oracle::cycle_mean_radius(MQ(9, 9)), Error);
}

TEST(CycleMean, AgreesWithSpectralRadius) {
  auto rng = rng_for(40);
  for (int t = 0; t < 300; ++t) {
    const MQ a = oracle::random_matrix(rng, 1 + t % 5, 1 + t % 5);
    EXPECT_EQ(oracle::cycle_mean_radius(a), spectral_radius(a));
  }
}

TEST(Enumeration, MatchesKnownFamilies) {
  EXPECT_EQ(oracle::enumerate_s(ex.a, ex.b, 1), (MQ{{4, 3, 5}, {4, 3, 5}, {2, 1, 3}}));
  EXPECT_EQ(oracle::enumerate_s(ex.a, ex.b, 2), (MQ{{8, 7, 9}, {7, 6, 8}, {6, 4, 6}}));
  EXPECT_EQ(oracle::enumerate_t(ex.a, ex.b, 0), (MQ{{0, -1, 1}, {1, 0, 2}, {-1, -2, 0}}));
  EXPECT_EQ(oracle::enumerate_t(ex.a, ex.b, 1), (MQ{{4, 3, 5}, {4, 3, 5}, {3, 1, 3}}));
  EXPECT_THROW(oracle::enumerate_s(MQ(6, 6), MQ(6, 6), 1), Error);
}

TEST(Enumeration, AgreesWithDynamicProgramme) {
  auto rng = rng_for(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    const MQ a = oracle::random_matrix(rng, n, n);
    const MQ b = oracle::random_matrix(rng, n, n);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(oracle::enumerate_s(a, b, k), compute_s(a, b, k));
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(oracle::enumerate_t(a, b, k), compute_t(a, b, k));
  }
}

TEST(FloydWarshall, AgreesWithStar) {
  EXPECT_EQ(oracle::closure_floyd_warshall(ex.b), kleene_star(ex.b));
  EXPECT_THROW(oracle::closure_floyd_warshall(MQ{{Z, 1}, {0, Z}}), Error);
  auto rng = rng_for(42);
  for (int t = 0; t < 200; ++t) {
    const MQ b = oracle::random_bounded_cycles(rng, 1 + t % 5);
    EXPECT_EQ(oracle::closure_floyd_warshall(b), kleene_star(b));
  }
}

TEST(Objective, ScheduleMatchesProblemForm) {
  const auto pr = build_problem(ex.spec());
  auto rng = rng_for(43);
  for (int t = 0; t < 200; ++t) {
    const VQ x = random_regular(rng, 3);
    EXPECT_EQ(oracle::schedule_objective(ex.spec(), x), objective_value(pr, x));
    EXPECT_EQ(max_flow_time(ex.spec(), x), objective_value(pr, x));
  }
}

TEST(Generators, RespectPromises) {
  auto rng = rng_for(44);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    EXPECT_TRUE(big_tr(oracle::random_bounded_cycles(rng, n)) <= Q::one());
    EXPECT_TRUE(oracle::random_column_regular(rng, n).column_regular());
    const auto spec = oracle::random_schedule(rng, n);
    EXPECT_NO_THROW(solve_schedule(spec));
    const auto kind = static_cast<ProblemKind>(t % 6);
    EXPECT_NO_THROW(solve(oracle::random_problem(rng, kind, n)));
  }
}

}  // namespace
}  // namespace tropt::test
