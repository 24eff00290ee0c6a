#include "mixrep/lemma2_tower.hpp"
#include "mixrep/probes.hpp"
#include "mixrep/suites.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mixrep;
using P = Point<Rational>;

namespace {

// Membership by brute force over c = 0..c_last, without the finite reduction.
bool brute_member(const P& x, const Rational& y, const P& z, long long c_last = 10000) {
  if (!(x[0] == z[0] && x[1] == z[1] && z[0] >= 0 && z[0] * z[0] <= z[1] && x[3] >= 0 && x[3] <= x[2])) {
    return false;
  }
  for (long long c = 0; c <= c_last; ++c) {
    if (lemma2::h(x[2], x[3], Rational(c)) > lemma2::l(z, Rational(c)) * y) return false;
  }
  return true;
}

}  // namespace

TEST(Lemma2L, Examples) {
  for (long long c = 0; c <= 20; ++c) EXPECT_EQ(lemma2::l({Rational(c), Rational(c * c)}, Rational(c)), 0);
  EXPECT_EQ(lemma2::l({1, 2}, 3), 5);
  // Integer points of I off the parabola vertex keep l >= 1.
  for (long long z1 = 0; z1 <= 6; ++z1) {
    for (long long z2 = z1 * z1; z2 <= z1 * z1 + 6; ++z2) {
      for (long long c = 0; c <= 10; ++c) {
        if (z2 == c * c && z1 == c) continue;
        EXPECT_GE(lemma2::l({Rational(z1), Rational(z2)}, Rational(c)), 1);
      }
    }
  }
}

TEST(Lemma2H, Examples) {
  EXPECT_EQ(lemma2::h(7, 3, 0), 9);
  EXPECT_EQ(lemma2::h(2, 1, 1), 0);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    const Rational x3(static_cast<long long>(rng() % 50), 1 + static_cast<long long>(rng() % 5));
    const Rational x4 = x3 * Rational(static_cast<long long>(rng() % 11), 10);
    const Rational c(static_cast<long long>(rng() % 1000));
    EXPECT_LE(lemma2::h(x3, x4, c), lemma2::h_bound(x3, x4));
  }
  // Large c approaches (x4 - x3)^2.
  EXPECT_NEAR(lemma2::h(5, 2, 1000000).convert_to<double>(), 9.0, 1e-4);
}

TEST(Lemma2MemberM, Examples) {
  EXPECT_TRUE(lemma2::member_M({1, 1, 2, 1}, 1, {1, 1}));
  EXPECT_FALSE(lemma2::member_M({1, 1, 2, 1}, 0, {1, 1}));
  // With y = 0 at z = (0, 0) the constraint forces h = 0 for all c >= 1, which
  // fails for x3 = 5, x4 = 0; y = 25 suffices.
  EXPECT_FALSE(lemma2::member_M({0, 0, 5, 0}, 0, {0, 0}));
  EXPECT_FALSE(brute_member({0, 0, 5, 0}, 0, {0, 0}));
  EXPECT_TRUE(lemma2::member_M({0, 0, 5, 0}, 25, {0, 0}));
  EXPECT_TRUE(brute_member({0, 0, 5, 0}, 25, {0, 0}));
  EXPECT_TRUE(lemma2::member_M({0, 0, 0, 0}, 0, {0, 0}));
  EXPECT_FALSE(lemma2::member_M({1, 2, 3, 1}, -1, {1, 2}));
}

TEST(Lemma2MemberM, AgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 300; ++k) {
    const long long z1 = static_cast<long long>(rng() % 4);
    const long long z2 = z1 * z1 + static_cast<long long>(rng() % 3);
    const Rational x3(static_cast<long long>(rng() % 20), 1 + static_cast<long long>(rng() % 3));
    const Rational x4 = x3 * Rational(static_cast<long long>(rng() % 9), 8);
    const Rational y(static_cast<long long>(rng() % 30), 1 + static_cast<long long>(rng() % 4));
    const P x{Rational(z1), Rational(z2), x3, x4};
    const P z{Rational(z1), Rational(z2)};
    EXPECT_EQ(lemma2::member_M(x, y, z), brute_member(x, y, z, 2000)) << k;
  }
}

TEST(Lemma2MemberM, RealZAndGuard) {
  // The oracle accepts non-integer z: interior point with a generous y.
  EXPECT_TRUE(lemma2::member_M({Rational(1, 2), 1, 4, 2}, 100, {Rational(1, 2), 1}));
  EXPECT_FALSE(lemma2::member_M({Rational(1, 2), 1, 4, 2}, 100, {Rational(1, 2), Rational(1, 8)}));
  // A tiny y makes the prefix astronomically long.
  EXPECT_THROW(lemma2::member_M({1, 2, 1000, 0}, Rational(1, 1000000000000LL), {1, 2}), std::range_error);
}

TEST(Lemma2MemberM, MembershipSuiteHasNoDisagreements) {
  const auto rep = suites::lemma2_membership(42, 10000);
  EXPECT_EQ(rep.tested, 10000u);
  EXPECT_TRUE(rep.passed());
  std::size_t inside = 0;
  for (const auto& r : rep.rows) inside += r.id.ends_with(" in") ? 1 : 0;
  // Both outcomes must be well represented.
  EXPECT_GT(inside, 2000u);
  EXPECT_LT(inside, 8000u);
}

TEST(Lemma2Slice, ClosedForms) {
  const auto a = std::get<HPolyhedron<Rational>>(lemma2::slice({1, 2}));
  EXPECT_TRUE(a.contains({1, 2, 3, 3}));
  EXPECT_FALSE(a.contains({1, 2, 3, 4}));
  const auto b = std::get<HPolyhedron<Rational>>(lemma2::slice({2, 4}));
  EXPECT_TRUE(b.contains({2, 4, 3, 2}));
  EXPECT_FALSE(b.contains({2, 4, 3, 1}));
  EXPECT_TRUE(std::holds_alternative<EmptySlice>(lemma2::slice({1, Rational(1, 2)})));
  EXPECT_TRUE(std::holds_alternative<EmptySlice>(lemma2::slice({-1, 5})));
  EXPECT_THROW(lemma2::slice({Rational(1, 2), Rational(1, 4)}), invalid_input);
  // z1 = 0 on the boundary: x4 = 0 and x3 >= 0.
  const auto c = std::get<HPolyhedron<Rational>>(lemma2::slice({0, 0}));
  EXPECT_TRUE(c.contains({0, 0, 4, 0}));
  EXPECT_FALSE(c.contains({0, 0, -4, 0}));
}

TEST(Lemma2Classify, TopologicalInterior) {
  EXPECT_EQ(lemma2::classify({1, 2}), IndexClass::Interior);
  EXPECT_EQ(lemma2::classify({1, 1}), IndexClass::Boundary);
  EXPECT_EQ(lemma2::classify({0, 3}), IndexClass::Boundary);
  EXPECT_EQ(lemma2::classify({2, 3}), IndexClass::Outside);
}

TEST(Lemma2Cones, Examples) {
  EXPECT_TRUE(cones_equal(lemma2::recession_cone_at({1, 5}), lemma2::interior_cone()));
  EXPECT_TRUE(cones_equal(lemma2::recession_cone_at({1, 1}), ray_cone(P{0, 0, 2, 1})));
  EXPECT_TRUE(cones_equal(lemma2::recession_cone_at({2, 4}), ray_cone(P{0, 0, 3, 2})));
  EXPECT_THROW(lemma2::recession_cone_at({3, 1}), infeasible_set);
  const auto g = enumerate(lemma2::recession_cone_at({3, 9}), 0.0);
  ASSERT_EQ(g.rays.size(), 1u);
  EXPECT_EQ(primitive_direction(g.rays[0]), (std::vector<BigInt>{0, 0, 4, 3}));
}

TEST(Lemma2Cones, BoundaryConesPairwiseDistinct) {
  const auto rep = suites::lemma2_boundary_cones(50);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.tested, 51u + 51u * 50u / 2u);
}

TEST(Lemma2Cones, InteriorConesConstant) {
  const auto rep = suites::lemma2_cones(3, 1, 100);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.tested, 101u);
}

TEST(Lemma2Formulation, Dimensions) {
  const auto f = lemma2::make_formulation();
  EXPECT_EQ(f.n, 4u);
  EXPECT_EQ(f.p, 1u);
  EXPECT_EQ(f.d, 2u);
  EXPECT_EQ(f.candidate_box({3, 10, 1, 0}).lo, (LatticePoint{3, 10}));
  EXPECT_TRUE(f.candidate_box({Rational(1, 2), 10, 1, 0}).empty());
}

TEST(Lemma2FC, SupportExamples) {
  const auto f = lemma2::make_formulation();
  EXPECT_EQ(f_c(f, P{1, 0, 0, 0}, P{1, 2}), ExtReal<Rational>(Rational(1)));
  EXPECT_EQ(f_c(f, P{1, 0, 0, 0}, P{3, 11}), ExtReal<Rational>(Rational(3)));
  EXPECT_TRUE(f_c(f, P{0, 0, -1, 0}, P{1, 2}).is_neg_inf());
  EXPECT_TRUE(f_c(f, P{1, 0, 0, 0}, P{2, 1}).is_pos_inf());
}
