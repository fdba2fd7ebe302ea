#include <gtest/gtest.h>

#include "support.hpp"

namespace tropt::test {
namespace {

constexpr int kCases = 500;

std::size_t order(int t) { return 1 + static_cast<std::size_t>(t) % 4; }

TEST(Identities, ScalarFrobenius) {
  auto rng = rng_for(60);
  for (int t = 0; t < kCases; ++t) {
    const VQ v = oracle::random_vector(rng, 2);
    const Rational k(1 + t % 5);
    EXPECT_EQ(pow(v[0] + v[1], k), pow(v[0], k) + pow(v[1], k));
    if (!(v[0] + v[1]).is_zero()) {
      const Rational root(1, 1 + t % 5);
      EXPECT_EQ(pow(v[0] + v[1], root), pow(v[0], root) + pow(v[1], root));
    }
  }
}

TEST(Identities, IdentityPlusPower) {
  auto rng = rng_for(61);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t);
    const MQ a = oracle::random_matrix(rng, n, n);
    const unsigned m = 1 + t % 4;
    MQ sum = MQ::identity(n);
    for (unsigned k = 1; k <= m; ++k) sum = sum + mat_pow(a, k);
    EXPECT_EQ(mat_pow(MQ::identity(n) + a, m), sum);
  }
}

TEST(Identities, BinomialExpansion) {
  auto rng = rng_for(62);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t);
    const MQ a = oracle::random_matrix(rng, n, n);
    const MQ b = oracle::random_matrix(rng, n, n);
    const std::size_t m = 1 + t % 4;
    const auto [lhs, rhs] = binomial_sides(a, b, m);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Identities, AccumulatedBinomial) {
  auto rng = rng_for(70);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t);
    const MQ a = oracle::random_matrix(rng, n, n);
    const MQ b = oracle::random_matrix(rng, n, n);
    const std::size_t m = 1 + t % 4;
    const auto [lhs, rhs] = accumulated_binomial_sides(a, b, m);
    EXPECT_EQ(lhs, rhs);
    const auto [tl, tr] = trace_binomial_sides(a, b, m);
    EXPECT_EQ(tl, tr);
  }
}

TEST(Identities, StarFixpoint) {
  auto rng = rng_for(63);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t) + 1;
    const MQ a = oracle::random_bounded_cycles(rng, n);
    const MQ star = kleene_star(a);
    EXPECT_EQ(star, MQ::identity(n) + a * star);
    EXPECT_EQ(star, MQ::identity(n) + star * a);
    EXPECT_EQ(star * star, star);
  }
}

TEST(Identities, FamilyRecurrences) {
  auto rng = rng_for(64);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t);
    const MQ a = oracle::random_matrix(rng, n, n);
    const MQ b = oracle::random_matrix(rng, n, n);
    const auto f = sum_families(a, b);
    EXPECT_EQ(f.s[0], MQ::identity(n));
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(f.s[k + 1], a * f.t[k]);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_TRUE(mat_pow(a, static_cast<unsigned>(k)) <= f.s[k]);
    EXPECT_EQ(f.s[n], mat_pow(a, static_cast<unsigned>(n)));
  }
}

TEST(Identities, ConjugateVectors) {
  auto rng = rng_for(65);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t);
    const VQ x = random_regular(rng, n);
    EXPECT_EQ(conj(x) * x, Q::one());
    EXPECT_TRUE(MQ::identity(n) <= x * conj(x));
    const VQ y = random_regular(rng, n);
    EXPECT_EQ(conj(x + y), conj(conj(conj(x)) + conj(conj(y))));
    EXPECT_TRUE(conj(x + y) <= conj(x));
  }
}

TEST(Bounds, LowerEstimateDominated) {
  auto rng = rng_for(66);
  for (int t = 0; t < kCases; ++t) {
    const auto pr = oracle::random_problem(rng, ProblemKind::General, order(t));
    const auto res = solve(pr);
    const Q lambda = spectral_radius(pr.a);
    const Q qp = conj(*pr.q) * pr.p.value_or(VQ(pr.dim()));
    const Q bound = lambda + pow(qp, rat(1, 2)) + pr.r.value_or(Z);
    EXPECT_TRUE(bound <= res.minimum);
  }
}

TEST(Bounds, PartialSumsDominated) {
  auto rng = rng_for(67);
  for (int t = 0; t < kCases; ++t) {
    const auto pr = oracle::random_problem(rng, ProblemKind::General, order(t));
    const VQ zero(pr.dim());
    const auto terms = general_terms(pr.a, *pr.b, pr.p.value_or(zero), conj(*pr.q), pr.g.value_or(zero),
                                     conj(*pr.h), pr.r.value_or(Z));
    EXPECT_TRUE(spectral_radius(pr.a) <= terms.trace_sum);
    EXPECT_TRUE(terms.trace_sum <= terms.total());
    EXPECT_TRUE(terms.mixed_sum <= terms.total());
    EXPECT_EQ(terms.total(), solve(pr).minimum);
  }
}

TEST(Bounds, FeasiblePointsNeverBeatMinimum) {
  auto rng = rng_for(68);
  for (int t = 0; t < kCases; ++t) {
    const auto kind = static_cast<ProblemKind>(t % 6);
    const auto pr = oracle::random_problem(rng, kind, order(t));
    const auto res = solve(pr);
    EXPECT_TRUE(satisfies_constraints(pr, res.canonical));
    EXPECT_EQ(objective_value(pr, res.canonical), res.minimum);
    const VQ x = random_regular(rng, pr.dim());
    if (satisfies_constraints(pr, x)) EXPECT_TRUE(res.minimum <= objective_value(pr, x));
  }
}

TEST(Bounds, UpperBoundedIsGreatest) {
  auto rng = rng_for(69);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = order(t);
    const MQ a = oracle::random_column_regular(rng, n);
    const VQ d = random_regular(rng, n);
    const VQ xmax = solve_upper_bounded(a, d);
    EXPECT_TRUE(a * xmax <= d);
    const VQ x = random_regular(rng, n);
    if (a * x <= d) EXPECT_TRUE(x <= xmax);
  }
}

}  // namespace
}  // namespace tropt::test
