#include "mixrep/ext_real.hpp"
#include "mixrep/linalg.hpp"
#include "mixrep/scalar.hpp"

#include <gtest/gtest.h>

using namespace mixrep;

TEST(Scalar, ExactComparisonIgnoresTolerance) {
  const Scalar a = Scalar::ratio(1, 3);
  const Scalar b = Scalar::ratio(1, 3) + Scalar(Rational(1, 1000000000000LL));
  EXPECT_TRUE(a.is_exact());
  EXPECT_NE(a, b);
  EXPECT_LT(a, b);
  EXPECT_EQ(a + a + a, Scalar(1));
}

TEST(Scalar, FloatComparisonIsSymmetricWithinTol) {
  const Scalar a(1.0);
  const Scalar b(1.0 + 5e-10);
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, a);
  EXPECT_NE(Scalar(1.0), Scalar(1.0 + 2e-9));
  EXPECT_EQ(Scalar(1.0, 1e-3), Scalar(1.0005));
}

TEST(Scalar, MixedArithmeticPromotesToFloat) {
  const Scalar r = Scalar::ratio(1, 4) + Scalar(0.5);
  EXPECT_FALSE(r.is_exact());
  EXPECT_DOUBLE_EQ(r.as_double(), 0.75);
  EXPECT_DOUBLE_EQ(r.tol(), kDefaultTol);
  const Scalar wide = Scalar(2.0, 1e-3) * Scalar::ratio(1, 2);
  EXPECT_DOUBLE_EQ(wide.tol(), 1e-3);
  EXPECT_THROW(Scalar::ratio(1, 0), invalid_parameter);
  EXPECT_THROW(Scalar(1) / Scalar(0), invalid_parameter);
}

TEST(Scalar, Formatting) {
  EXPECT_EQ(Scalar::ratio(1, 3).str(), "1/3");
  EXPECT_EQ(Scalar::ratio(4, 2).str(), "2");
  EXPECT_EQ(Scalar::ratio(-3, 6).str(), "-1/2");
  EXPECT_EQ(Scalar(1.0 / 3.0).str(), "0.333333333333");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Scalar, IntegerHelpers) {
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
  EXPECT_EQ(floor_of(Rational(3)), 3);
  EXPECT_TRUE(is_integer(Rational(6, 3)));
  EXPECT_FALSE(is_integer(Rational(1, 2)));
}

TEST(ExtReal, TotalOrderWithInfiniteExtremes) {
  using E = ExtReal<Rational>;
  const E lo = E::neg_inf();
  const E hi = E::pos_inf();
  const E mid(Rational(5));
  EXPECT_LT(lo, mid);
  EXPECT_LT(mid, hi);
  EXPECT_LT(lo, hi);
  EXPECT_EQ(-hi, lo);
  EXPECT_EQ(-mid, E(Rational(-5)));
  EXPECT_EQ(hi.str(), "+inf");
  EXPECT_EQ(lo.str(), "-inf");
  EXPECT_THROW((void)hi.value(), std::logic_error);
  EXPECT_TRUE(std::isinf(lo.to_double()));
}

TEST(Linalg, NullSpaceAndPrimitiveDirections) {
  const Matrix<Rational> a{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -2, 4}};
  const auto ns = null_space(a, 4, 0.0);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : a) EXPECT_EQ(dot(row, ns[0]), 0);
  EXPECT_EQ(primitive_direction(Point<Rational>{0, 0, Rational(4), Rational(2)}),
            (std::vector<BigInt>{0, 0, 2, 1}));
  EXPECT_EQ(primitive_direction(Point<Rational>{Rational(1, 2), Rational(-1, 3)}), (std::vector<BigInt>{3, -2}));
  EXPECT_EQ(rank(a, 4, 0.0), 3u);
}
