#include <gtest/gtest.h>

#include "support.hpp"

namespace tropt::test {
namespace {

const Example ex;

TEST(BuildProblem, Example) {
  const auto pr = build_problem(ex.spec());
  EXPECT_EQ(pr.kind, ProblemKind::General);
  EXPECT_EQ(*pr.r, Q(2));
  EXPECT_EQ(conj(*pr.q), conj(ex.q) * ex.a);
  EXPECT_EQ(conj(*pr.q), (RQ{1, 1, 2}));
}

TEST(BuildProblem, Validation) {
  auto spec = ex.spec();
  spec.start_finish = MQ{{4, Z, Z}, {2, Z, 1}, {1, Z, 3}};
  spec.latest_start = VQ{2, Z, 3};
  try {
    build_problem(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SpecValidation);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("column-regular"), std::string::npos);
    EXPECT_NE(msg.find("latestStart"), std::string::npos);
  }
  spec = ex.spec();
  spec.window_upper = VQ{1, 2};
  EXPECT_THROW(solve_schedule(spec), Error);
  spec = ex.spec();
  spec.activities = {"only one"};
  EXPECT_THROW(solve_schedule(spec), Error);
}

TEST(SolveSchedule, WorkedExample) {
  const auto res = solve_schedule(ex.spec());
  EXPECT_EQ(res.theta, Q(4));
  EXPECT_EQ(res.initiation, (VQ{2, 3, 1}));
  EXPECT_EQ(res.solutions.lower, (VQ{0, 0, 1}));
  EXPECT_EQ(*res.solutions.upper, (VQ{2, 3, 1}));
  EXPECT_TRUE(res.solutions.unique());
  EXPECT_EQ(res.completion, ex.a * res.initiation);
  EXPECT_EQ(res.completion, (VQ{6, 6, 4}));
  EXPECT_EQ(res.adjusted_start, (VQ{2, 2, 1}));
  EXPECT_EQ(res.adjusted_finish, (VQ{6, 6, 4}));
  EXPECT_EQ(res.flow_times, (VQ{4, 4, 3}));
  EXPECT_EQ(res.critical, (std::vector<std::size_t>{0, 1}));
}

TEST(SolveSchedule, LedgerSums) {
  const auto& led = solve_schedule(ex.spec()).ledger;
  EXPECT_EQ(led.trace_sum, Q(4));
  EXPECT_EQ(led.hg_sum, Q(4));
  EXPECT_EQ(led.qg_sum, Q(4));
  EXPECT_EQ(led.hp_sum, Q(rat(10, 3)));
  EXPECT_EQ(led.qp_sum, Q(rat(13, 4)));
  EXPECT_EQ(led.theta_q_a, (RQ{-3, -3, -2}));
  EXPECT_EQ(led.upper_row, (RQ{-2, -3, -2}));
  EXPECT_EQ(led.h_t[1], (RQ{2, 1, 3}));
  EXPECT_EQ(led.h_t[2], (RQ{6, 3, 3}));
  EXPECT_EQ(led.q_s[0], (RQ{-3, -2, -1}));
  EXPECT_EQ(led.q_s[1], (RQ{2, 1, 3}));
  EXPECT_EQ(led.q_s[2], (RQ{5, 4, 6}));
  EXPECT_EQ(led.q_s[3], (RQ{9, 7, 8}));
}

TEST(SolveSchedule, SingleActivity) {
  ScheduleSpec<Q> spec{{"solo"}, MQ{{5}}, MQ{{Z}}, VQ{0}, VQ{10}, VQ{0}, VQ{6}};
  const auto res = solve_schedule(spec);
  EXPECT_EQ(res.theta, Q(6));
  EXPECT_EQ(oracle::schedule_objective(spec, res.initiation), Q(6));
  // dense 1-d scan
  Q best = Z;
  for (int k = 0; k <= 120; ++k) {
    const Q v = oracle::schedule_objective(spec, VQ{Q(rat(k, 12))});
    if (best.is_zero() || v < best) best = v;
  }
  EXPECT_EQ(best, Q(6));
  const auto line = collapse_solution_line(res);
  ASSERT_TRUE(line.has_value());
  EXPECT_EQ(line->direction, VQ{0});
  EXPECT_EQ(line->v_lower, res.solutions.lower[0]);
  EXPECT_EQ(line->v_upper, (*res.solutions.upper)[0]);
}

TEST(SolveSchedule, DecoupledPointWindows) {
  // Diagonal A with point windows [c_i, c_i]: each activity is on its own.
  ScheduleSpec<Q> spec{{}, MQ{{2, Z}, {Z, 3}}, MQ(2, 2), VQ{0, 0}, VQ{0, 0}, VQ{0, 0}, VQ{0, 0}};
  const auto res = solve_schedule(spec);
  EXPECT_EQ(res.theta, Q(3));
  EXPECT_EQ(res.flow_times, (VQ{2, 3}));
}

TEST(SolveSchedule, Infeasible) {
  auto spec = ex.spec();
  spec.earliest_start = VQ{0, 0, 4};
  try {
    solve_schedule(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfeasibleSchedule);
    EXPECT_NE(std::string(e.what()).find("h⁻B*g"), std::string::npos);
  }
  spec = ex.spec();
  spec.start_start = MQ{{Z, 1, Z}, {0, Z, Z}, {Z, Z, Z}};
  try {
    solve_schedule(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfeasibleSchedule);
    EXPECT_NE(std::string(e.what()).find("Tr(B)"), std::string::npos);
  }
}

TEST(CollapseLine, Examples) {
  const auto res = solve_schedule(ex.spec());
  const auto line = collapse_solution_line(res);
  ASSERT_TRUE(line.has_value());
  EXPECT_EQ(line->direction, (VQ{1, 2, 0}));
  EXPECT_EQ(line->v_lower, Q(1));
  EXPECT_EQ(line->v_upper, Q(1));
  EXPECT_TRUE(line->unique());
  EXPECT_EQ(line->direction * line->coefficients, res.solutions.generator);

  const SolutionSet<Q> identity{MQ::identity(3), VQ{0, 0, 0}, VQ{1, 1, 1}, std::nullopt};
  EXPECT_FALSE(collapse_solution_line(identity).has_value());
}

TEST(SolveSchedule, FloatModeMatches) {
  const auto res = solve_schedule(to_float(ex.spec()));
  EXPECT_NEAR(res.theta.to_double(), 4.0, 1e-9);
  EXPECT_TRUE(approx_equal(res.initiation, Vector<D>{D(2.0), D(3.0), D(1.0)}, 1e-9));
  const auto line = collapse_solution_line(res);
  ASSERT_TRUE(line.has_value());
  EXPECT_NEAR(line->v_lower.to_double(), 1.0, 1e-9);
}

TEST(SolveSchedule, RearrangedFormAgrees) {
  // Solving the schedule directly and via the equivalent general problem.
  auto rng = rng_for(30);
  for (int t = 0; t < 100; ++t) {
    const auto spec = oracle::random_schedule(rng, 1 + t % 4);
    const auto direct = solve_schedule(spec);
    const auto general = solve(build_problem(spec));
    EXPECT_EQ(direct.theta, general.minimum);
    EXPECT_EQ(direct.solutions.generator, general.solutions.generator);
    EXPECT_EQ(direct.solutions.lower, general.solutions.lower);
    EXPECT_EQ(*direct.solutions.upper, *general.solutions.upper);
  }
}

TEST(SolveSchedule, ResubstitutionOverTheFamily) {
  auto rng = rng_for(31);
  for (int t = 0; t < 100; ++t) {
    const auto spec = oracle::random_schedule(rng, 1 + t % 3);
    const auto res = solve_schedule(spec);
    const VQ lo = res.solutions.regular_lower();
    const VQ& hi = *res.solutions.upper;
    for (int s = 0; s <= 4; ++s) {
      VQ u = lo;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = lo[i] * Q((hi[i].value() - lo[i].value()) * rat(s, 4));
      const VQ x = res.solutions.point(u);
      EXPECT_TRUE(spec.start_start * x <= x);
      EXPECT_TRUE(spec.earliest_start <= x);
      EXPECT_TRUE(x <= spec.latest_start);
      EXPECT_EQ(oracle::schedule_objective(spec, x), res.theta);
    }
    Q worst = Z;
    for (const auto& f : res.flow_times) worst += f;
    EXPECT_EQ(worst, res.theta);
  }
}

TEST(SolveSchedule, Monotonicity) {
  auto rng = rng_for(32);
  for (int t = 0; t < 100; ++t) {
    const auto spec = oracle::random_schedule(rng, 1 + t % 3);
    const Q theta = solve_schedule(spec).theta;
    auto wider = spec;
    const std::size_t i = static_cast<std::size_t>(t) % spec.size();
    wider.window_lower[i] = wider.window_lower[i] * Q(-1);
    wider.window_upper[i] = wider.window_upper[i] * Q(1);
    EXPECT_GE(solve_schedule(wider).theta, theta);
    auto relaxed = spec;
    relaxed.latest_start[i] = relaxed.latest_start[i] * Q(2);
    EXPECT_LE(solve_schedule(relaxed).theta, theta);
  }
}

}  // namespace
}  // namespace tropt::test
