#include "mixrep/polygon_tower.hpp"
#include "mixrep/suites.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mixrep;
using V = Vec2<double>;

namespace {

// Smallest m with r(i) cos(pi/m) >= (r(i-1) + r(i+1))/2, by search in long double.
long long apothem_oracle(long long i) {
  const long double ri = static_cast<long double>(i) / (2.0L * (i + 1));
  const long double lo = static_cast<long double>(i - 1) / (2.0L * i);
  const long double hi = static_cast<long double>(i + 1) / (2.0L * (i + 2));
  const long double need = (lo + hi) / 2;
  for (long long m = 3;; ++m) {
    if (ri * std::cos(std::numbers::pi_v<long double> / m) >= need) return m;
  }
}

}  // namespace

TEST(TowerR, Values) {
  EXPECT_EQ(tower::r(1), Rational(1, 4));
  EXPECT_EQ(tower::r(2), Rational(1, 3));
  EXPECT_EQ(tower::r(0), 0);
  for (long long i = 0; i < 200; ++i) {
    EXPECT_LT(tower::r(i), tower::r(i + 1));
    EXPECT_LT(tower::r(i), Rational(1, 2));
  }
  EXPECT_THROW(tower::r(-1), invalid_parameter);
}

TEST(TowerG, FrozenValues) {
  const std::vector<long long> expected{4, 9, 15, 22, 30, 38, 47, 57, 67, 77, 89, 100};
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(tower::g(static_cast<long long>(k) + 1), expected[k]);
  EXPECT_EQ(tower::g(98), 2178);
  EXPECT_EQ(tower::g(99), 2211);
  EXPECT_EQ(tower::g(100), 2244);
  EXPECT_EQ(tower::g_argument(1), Rational(2, 3));
  EXPECT_EQ(tower::g_argument(2), Rational(15, 16));
  EXPECT_EQ(tower::g_argument(3), Rational(44, 45));
  EXPECT_THROW(tower::g(0), invalid_parameter);
}

TEST(TowerG, MatchesApothemOracleAndIncreases) {
  for (long long i = 1; i <= 100; ++i) {
    EXPECT_EQ(tower::g(i), apothem_oracle(i)) << i;
    EXPECT_FALSE(tower::g_detailed(i).near_integer) << i;
    if (i > 1) {
      EXPECT_GT(tower::g(i), tower::g(i - 1));
    }
  }
}

TEST(TowerLine, Examples) {
  EXPECT_EQ(tower::line_l(2, 2), Rational(5, 16));
  for (long long i = 1; i <= 50; ++i) {
    EXPECT_EQ(tower::line_l(i, Rational(i)), tower::inner_radius(i));
    EXPECT_EQ(tower::line_l(i, Rational(i - 1)), tower::r(i - 1));
    EXPECT_EQ(tower::line_l(i, Rational(i + 1)), tower::r(i + 1));
    EXPECT_GT(tower::line_l(i, Rational(i + 1)), tower::line_l(i, Rational(i)));
  }
  EXPECT_EQ(tower::cone_height(3, 3), 1);
}

TEST(TowerP, Shapes) {
  const auto p1 = tower::P(1);
  const std::vector<V> diamond{{0, 0.25}, {-0.25, 0}, {0, -0.25}, {0.25, 0}};
  ASSERT_EQ(p1.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(approx_eq(p1.vertex(k), diamond[k], 1e-15));
  EXPECT_EQ(tower::P(2).size(), 9u);
  EXPECT_NEAR(circumradius(tower::P(2)), 1.0 / 3.0, 1e-15);
  for (long long i = 1; i <= 100; ++i) {
    EXPECT_TRUE(ball_in_polygon(tower::P_cached(i), tower::inner_radius(i).convert_to<double>(), 1e-12)) << i;
    EXPECT_TRUE(polygon_in_ball(tower::P_cached(i), tower::r(i).convert_to<double>(), 1e-12));
  }
}

TEST(TowerP, FrozenAreas) {
  EXPECT_NEAR(polygon_area(tower::P(1)), 0.125, 1e-15);
  EXPECT_NEAR(polygon_area(tower::P(2)), 0.3213938048432696, 1e-14);
  EXPECT_NEAR(polygon_area(tower::P(3)), 0.42898005324400795, 1e-14);
}

TEST(TowerTildeC, Examples) {
  for (long long i = 1; i <= 10; ++i) {
    for (long long j = 1; j <= 10; ++j) {
      if (tower::line_l(i, Rational(j)) >= 0) {
        EXPECT_TRUE(tower::tilde_c(i, {0, 0}, Rational(j)).member);
      }
      if (i == j) continue;
      for (const auto& v : tower::P_cached(j).vertices()) EXPECT_TRUE(tower::tilde_c(i, v, Rational(j)).member);
    }
    const double ri = tower::r(i).convert_to<double>();
    EXPECT_FALSE(tower::tilde_c(i, {ri + 0.01, 0}, Rational(i)).member);
  }
  // Where l_i is negative the cone is empty.
  EXPECT_LT(tower::line_l(5, Rational(-100)), 0);
  EXPECT_FALSE(tower::tilde_c(5, {0, 0}, Rational(-100)).member);
}

TEST(TowerMemberS, Examples) {
  EXPECT_TRUE(tower::member_S({1.2, 0}).member);
  EXPECT_FALSE(tower::member_S({1.3, 0}).member);
  const auto c = tower::member_S({2, 0});
  EXPECT_TRUE(c.member);
  EXPECT_EQ(c.z, 2);
  EXPECT_TRUE(c.family_agrees);
  EXPECT_FALSE(tower::member_S({-3, 0}).member);
}

TEST(TowerMemberS, FamilyAgreesWithPolygons) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xs(0.5, 12.5);
  std::uniform_real_distribution<double> ys(-0.5, 0.5);
  const tower::PolygonTower t(12);
  int members = 0;
  for (int k = 0; k < 2000; ++k) {
    const V x{xs(rng), ys(rng)};
    const auto m = tower::member_S(x, 12);
    if (m.member) {
      ++members;
      EXPECT_TRUE(m.family_agrees);
      EXPECT_TRUE(t.member_M({x.x, x.y}, {static_cast<double>(m.z)}));
    } else {
      for (const auto& z : tower::candidate_box(x.x).points()) {
        EXPECT_FALSE(t.member_M({x.x, x.y}, {static_cast<double>(z[0])}, 1e-12));
      }
    }
  }
  EXPECT_GT(members, 100);
}

TEST(TowerSweep, ValidOnOneToForty) {
  const auto sw = tower::validity_sweep(1, 40, 1, 40, 2);
  EXPECT_EQ(sw.checks, 40u * 39u);
  EXPECT_EQ(sw.failures, 0u);
  EXPECT_GE(sw.min_slack, -1e-9);
  EXPECT_LE(sw.max_diagonal_gap, 1e-12);
  EXPECT_EQ(sw.concavity_failures, 0u);
  // Deterministic regardless of worker count.
  const auto one = tower::validity_sweep(1, 12, 1, 12, 1);
  const auto four = tower::validity_sweep(1, 12, 1, 12, 4);
  ASSERT_EQ(one.cells.size(), four.cells.size());
  for (std::size_t k = 0; k < one.cells.size(); ++k) EXPECT_EQ(one.cells[k].slack, four.cells[k].slack);
}

TEST(TowerGeometry, DisjointnessExact) {
  for (long long i = 1; i <= 100; ++i) {
    const Rational gap = 1 - tower::r(i) - tower::r(i + 1);
    EXPECT_EQ(gap, (Rational(1, i + 1) + Rational(1, i + 2)) / 2);
    EXPECT_GT(gap, 0);
  }
  EXPECT_TRUE(suites::tower_geometry(100).passed());
}

TEST(TowerFormulation, SlicesAndRejection) {
  EXPECT_THROW(tower::PolygonTower(1), invalid_parameter);
  const tower::PolygonTower t(6);
  const auto f = t.formulation();
  EXPECT_EQ(f.n, 2u);
  EXPECT_EQ(f.p, 0u);
  EXPECT_EQ(f.d, 1u);
  const auto s3 = slice_polygon(f.slice({3.0}));
  ASSERT_TRUE(s3);
  EXPECT_EQ(s3->size(), 15u);
  EXPECT_TRUE(polygon_contains(*s3, V{3, 0}));
  EXPECT_TRUE(std::holds_alternative<EmptySlice>(f.slice({0.0})));
  // Between integers the slice is the truncated cone intersection and still
  // contains the segment joining neighbouring centres.
  const auto mid = f.slice({2.5});
  EXPECT_TRUE(slice_contains(mid, {2.5, 0.0}));
  EXPECT_FALSE(slice_contains(mid, {2.5, 0.49}));
}
