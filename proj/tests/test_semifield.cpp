#include <gtest/gtest.h>

#include <limits>

#include "support.hpp"

namespace tropt::test {
namespace {

TEST(MaxPlusScalar, AdditionIsMax) {
  EXPECT_EQ(Q(3) + Q(5), Q(5));
  EXPECT_EQ(Z + Q(7), Q(7));
  EXPECT_EQ(Q(4) + Q(4), Q(4));
  EXPECT_EQ(add(Q(-2), Z), Q(-2));
}

TEST(MaxPlusScalar, MultiplicationIsPlus) {
  EXPECT_EQ(Q(3) * Q(5), Q(8));
  EXPECT_EQ(Z * Q(5), Z);
  EXPECT_EQ(Q::one() * Q(9), Q(9));
  EXPECT_EQ(mul(Q(rat(1, 2)), Q(rat(1, 3))), Q(rat(5, 6)));
}

TEST(MaxPlusScalar, Inverse) {
  EXPECT_EQ(inv(Q(4)), Q(-4));
  EXPECT_EQ(inv(Q::one()), Q::one());
  try {
    inv(Z);
    FAIL() << "inverting zero must throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InversionOfZero);
  }
}

TEST(MaxPlusScalar, RationalPowers) {
  EXPECT_EQ(pow(Q(8), rat(1, 2)), Q(4));
  EXPECT_EQ(pow(Q(12), rat(1, 3)), Q(4));
  EXPECT_EQ(pow(Q(10), rat(1, 3)), Q(rat(10, 3)));
  EXPECT_EQ(pow(Q(-7), rat(0)), Q::one());
  EXPECT_EQ(pow(Z, rat(1, 4)), Z);
  EXPECT_THROW(pow(Z, rat(0)), Error);
  EXPECT_THROW(pow(Z, rat(-1)), Error);
}

TEST(MaxPlusScalar, Order) {
  EXPECT_TRUE(leq(Q(3), Q(5)));
  EXPECT_FALSE(leq(Q(5), Q(3)));
  for (int v : {-100, 0, 7}) EXPECT_TRUE(leq(Z, Q(v)));
  EXPECT_TRUE(leq(Z, Z));
  EXPECT_LT(Q(1), Q(2));
  EXPECT_GT(Q(2), Z);
}

TEST(MaxPlusScalar, OrderAgreesWithAddition) {
  auto rng = rng_for(1);
  for (int t = 0; t < 500; ++t) {
    const VQ v = oracle::random_vector(rng, 2);
    EXPECT_EQ(v[0] <= v[1], v[0] + v[1] == v[1]);
  }
}

TEST(MaxPlusScalar, FloatZeroEncoding) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(D(-inf).is_zero());
  EXPECT_EQ(D(-inf), D::zero());
  EXPECT_THROW((void)D{inf}, Error);
  EXPECT_THROW(D(std::numeric_limits<double>::quiet_NaN()), Error);
  EXPECT_EQ(D::zero().to_double(), -inf);
  EXPECT_EQ(D::zero().to_string(), "-inf");
}

TEST(MaxPlusScalar, ApproximateComparison) {
  EXPECT_TRUE(approx_equal(D(1.0), D(1.0 + 1e-12)));
  EXPECT_FALSE(approx_equal(D(1.0), D(1.0 + 1e-6)));
  EXPECT_TRUE(approx_leq(D(1.0 + 1e-12), D(1.0)));
  EXPECT_TRUE(approx_equal(D::zero(), D::zero()));
  EXPECT_FALSE(approx_equal(D::zero(), D(-1e300)));
}

TEST(MaxPlusScalar, Printing) {
  EXPECT_EQ(Q(rat(10, 3)).to_string(), "10/3");
  EXPECT_EQ(Q(-4).to_string(), "-4");
  EXPECT_EQ(Z.to_string(), "-inf");
  EXPECT_EQ(D(2.5).to_string(), "2.5");
}

TEST(MinPlusScalar, OrderReversed) {
  using M = MinPlusQ;
  EXPECT_EQ(M(3) + M(5), M(3));
  EXPECT_EQ(M::zero() + M(5), M(5));
  EXPECT_EQ(M(3) * M(5), M(8));
  EXPECT_TRUE(leq(M(5), M(3)));
  EXPECT_TRUE(leq(M::zero(), M(-1000)));
  EXPECT_EQ(M::zero().to_string(), "+inf");
  EXPECT_TRUE(MinPlusD(std::numeric_limits<double>::infinity()).is_zero());
  EXPECT_THROW(MinPlusD(-std::numeric_limits<double>::infinity()), Error);
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("7"), rat(7));
  EXPECT_EQ(parse_rational("-3/4"), rat(-3, 4));
  EXPECT_EQ(parse_rational("2.25"), rat(9, 4));
  EXPECT_EQ(parse_rational("-0.5"), rat(-1, 2));
  EXPECT_EQ(parse_rational("1e2"), rat(100));
  EXPECT_EQ(parse_rational("25e-2"), rat(1, 4));
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Numeric, RationalFromDouble) {
  EXPECT_EQ(rational_from_double(0.1), rat(1, 10));
  EXPECT_EQ(rational_from_double(-2.0), rat(-2));
  EXPECT_EQ(rational_from_double(10.0 / 4.0), rat(5, 2));
}

TEST(Errors, NamesAndCategories) {
  EXPECT_EQ(errc_name(Errc::InfeasibleSchedule), "InfeasibleSchedule");
  EXPECT_TRUE(is_infeasibility(Errc::NoRegularSolution));
  EXPECT_TRUE(is_infeasibility(Errc::InfeasibleConstraints));
  EXPECT_FALSE(is_infeasibility(Errc::SpecValidation));
  const Error e(Errc::ShapeMismatch, "details");
  EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  EXPECT_NE(std::string(e.what()).find("details"), std::string::npos);
}

}  // namespace
}  // namespace tropt::test
