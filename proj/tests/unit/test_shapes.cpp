#include "mixrep/box_tower.hpp"
#include "mixrep/fixtures.hpp"
#include "mixrep/polygon_tower.hpp"
#include "mixrep/shapes.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace mixrep;
using V = Vec2<double>;
using Poly = ConvexPolygon<double>;

namespace {

Poly poly(std::vector<V> v) { return Poly(std::move(v)); }

double bm_gap(const Poly& p, const Poly& q) {
  return std::sqrt(polygon_area(minkowski_sum(p, q))) - std::sqrt(polygon_area(p)) - std::sqrt(polygon_area(q));
}

}  // namespace

TEST(Homothety, Examples) {
  const auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto big = poly({{3, 2}, {5, 2}, {5, 4}, {3, 4}});
  const auto h = homothety_test(sq, big);
  ASSERT_TRUE(h);
  EXPECT_NEAR(h->scale, 2.0, 1e-12);
  EXPECT_TRUE(approx_eq(h->offset, V{3, 2}));
  EXPECT_FALSE(translation_equivalent(sq, big));
  EXPECT_TRUE(translation_equivalent(sq, translate(sq, V{7, -1})));
  // A square rotated by 45 degrees is not a homothet.
  const auto diamond = poly({{1, 0}, {2, 1}, {1, 2}, {0, 1}});
  EXPECT_FALSE(homothety_test(sq, diamond));
  // Point reflection has negative scale.
  const auto tri = poly({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_FALSE(homothety_test(tri, poly({{0, 0}, {-1, 0}, {0, -1}})));
}

TEST(Affine, Examples) {
  EXPECT_TRUE(affine_equivalent(poly({{0, 0}, {1, 0}, {0, 1}}), poly({{0, 0}, {5, 1}, {2, 7}})));
  const auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_TRUE(affine_equivalent(sq, poly({{0, 0}, {2, 0}, {3, 1}, {1, 1}})));
  EXPECT_FALSE(affine_equivalent(sq, poly({{0, 0}, {3, 0}, {2, 1}, {1, 1}})));
  EXPECT_TRUE(affine_equivalent(regular_polygon(6, 1.0), regular_polygon(6, 3.0, {2, 2})));
  EXPECT_FALSE(affine_equivalent(sq, poly({{0, 0}, {1, 0}, {0, 1}})));
}

TEST(Combinatorial, Examples) {
  EXPECT_TRUE(combinatorially_equivalent(poly({{0, 0}, {3, 0}, {2, 1}, {1, 1}}), regular_polygon(4, 1.0)));
  EXPECT_FALSE(combinatorially_equivalent(regular_polygon(5, 1.0), regular_polygon(6, 1.0)));
}

TEST(ShapeHierarchy, TranslationImpliesAffineImpliesCombinatorial) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> shift(-5, 5);
  std::uniform_int_distribution<int> mode(0, 3);
  for (int k = 0; k < 500; ++k) {
    const auto p = oracle::random_polygon(rng, 6, 6);
    Poly q = p;
    switch (mode(rng)) {
      case 0: q = translate(p, V{double(shift(rng)), double(shift(rng))}); break;
      case 1: q = translate(scaled(p, 2.0), V{double(shift(rng)), 0}); break;
      case 2: q = oracle::random_polygon(rng, 6, 6); break;
      default: break;
    }
    const bool t = translation_equivalent(p, q);
    const bool a = affine_equivalent(p, q);
    const bool c = combinatorially_equivalent(p, q);
    EXPECT_TRUE(!t || a) << k;
    EXPECT_TRUE(!a || c) << k;
  }
}

TEST(ShapeHierarchy, HomothetyIffBrunnMinkowskiEquality) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> scale(1, 4);
  std::uniform_int_distribution<int> shift(-9, 9);
  int homothetic = 0;
  for (int k = 0; k < 200; ++k) {
    const auto p = oracle::random_polygon(rng, 8, 10);
    const Poly q = (k % 2 == 0) ? translate(scaled(p, double(scale(rng))), V{double(shift(rng)), double(shift(rng))})
                                : oracle::random_polygon(rng, 8, 10);
    const bool h = homothety_test(p, q).has_value();
    homothetic += h ? 1 : 0;
    const double gap = bm_gap(p, q);
    EXPECT_GE(gap, -1e-9) << k;
    EXPECT_EQ(h, std::abs(gap) <= 1e-9) << k << " gap=" << gap;
  }
  EXPECT_GE(homothetic, 100);
}

TEST(ShapeClasses, TowerPolygonsPairwiseInequivalent) {
  std::vector<Poly> family;
  for (long long i = 1; i <= 10; ++i) family.push_back(tower::P_cached(i));
  for (auto notion : {ShapeNotion::Translation, ShapeNotion::Affine, ShapeNotion::Combinatorial}) {
    EXPECT_EQ(shape_classes(family, notion).class_count(), 10u) << to_string(notion);
  }
}

TEST(ShapeClasses, BoxTowerSingleClass) {
  const box_tower::BoxTower b;
  std::vector<ConvexPolygon<Rational>> family;
  std::vector<LatticePoint> keys;
  for (long long z = b.z_lo; z <= b.z_hi; ++z) {
    family.push_back(*slice_polygon(b.slice({Rational(z)})));
    keys.push_back({z});
  }
  const auto rep = translation_classes(family, keys, 0.0);
  EXPECT_EQ(rep.class_count(), 1u);
  EXPECT_EQ(rep.parity_bound, 2u);
  EXPECT_EQ(rep.parity_patterns, 2u);
}

TEST(ShapeClasses, InterleavedSquaresTwoClasses) {
  const auto sq = fixtures::interleaved_squares(-3, 3);
  std::vector<LatticePoint> keys;
  for (long long z = -3; z <= 3; ++z) keys.push_back({z});
  const auto rep = translation_classes(sq, keys);
  EXPECT_EQ(rep.class_count(), 2u);
  EXPECT_LE(rep.class_count(), rep.parity_bound);
  EXPECT_THROW(translation_classes(sq, {{0}}), invalid_input);
}
