#pragma once

// Four-dimensional tower with infinitely many distinct recession cones.
//
// M lives in (x, y, z) in R^4 x R x R^2 and is cut out by
//
//   h(x3, x4, c) <= l(z, c) * y      for every integer c >= 0
//   0 <= x4 <= x3,   x1 = z1,   x2 = z2,   0 <= z1,   z1^2 <= z2
//
// with l(z, c) = z2 - z1^2 + (z1 - c)^2 and h(x3, x4, c) = (x4 - c/(1+c) x3)^2.
//
// The infinite family is checked through a finite prefix. For y > 0 and
// B = max{(x4 - x3)^2, x4^2} we have h(., ., c) <= B for all c, and for every
// integer c > ceil(z1) + k with k^2 y >= B we get l(z, c) y >= (c - z1)^2 y
// > k^2 y >= B >= h, so only c <= ceil(z1) + k needs checking. For y <= 0
// the constraint forces h = 0 at every c where l(z, c) > 0, i.e. at all but at
// most one c; two distinct c already force x3 = x4 = 0, and y < 0 is
// infeasible outright because l(z, c) > 0 for some c.

#include "mixrep/formulation.hpp"
#include "mixrep/hpolyhedron.hpp"

#include <cmath>
#include <stdexcept>

namespace mixrep::lemma2 {

inline constexpr std::size_t kDimX = 4;
inline constexpr std::size_t kDimY = 1;
inline constexpr std::size_t kDimZ = 2;

/// l(z, c) = z2 - z1^2 + (z1 - c)^2.
inline Rational l(const Point<Rational>& z, const Rational& c) {
  const Rational d = z.at(0) - c;
  return z.at(1) - z[0] * z[0] + d * d;
}

/// h(x3, x4, c) = (x4 - (1 - 1/(1+c)) x3)^2.
inline Rational h(const Rational& x3, const Rational& x4, const Rational& c) {
  const Rational r = x4 - (c / (c + 1)) * x3;
  return r * r;
}

/// Upper bound on h over all c for (x3, x4) with 0 <= x4 <= x3.
inline Rational h_bound(const Rational& x3, const Rational& x4) {
  const Rational a = (x4 - x3) * (x4 - x3);
  const Rational b = x4 * x4;
  return a > b ? a : b;
}

inline bool in_index_set(const Point<Rational>& z) {
  return z.size() == kDimZ && z[0] >= 0 && z[0] * z[0] <= z[1];
}

/// Topological classification of z relative to I = {z1 >= 0, z1^2 <= z2}.
inline IndexClass classify(const Point<Rational>& z) {
  if (!in_index_set(z)) return IndexClass::Outside;
  return (z[0] > 0 && z[0] * z[0] < z[1]) ? IndexClass::Interior : IndexClass::Boundary;
}

namespace detail {

inline bool linear_part(const Point<Rational>& x, const Point<Rational>& z) {
  return x.size() == kDimX && in_index_set(z) && x[3] >= 0 && x[3] <= x[2] && x[0] == z[0] &&
         x[1] == z[1];
}

// Smallest integer k >= 0 with k^2 * y >= bound, for y > 0.
inline BigInt sqrt_ratio_ceil(const Rational& bound, const Rational& y) {
  const Rational q = bound / y;
  BigInt k(static_cast<long long>(std::ceil(std::sqrt(q.convert_to<double>()))));
  while (k > 0 && Rational((k - 1) * (k - 1)) >= q) --k;
  while (Rational(k * k) < q) ++k;
  return k;
}

}  // namespace detail

/// Indicator of M, with the infinite family reduced to a finite prefix.
inline bool member_M(const Point<Rational>& x, const Rational& y, const Point<Rational>& z) {
  if (!detail::linear_part(x, z)) return false;
  if (y < 0) return false;
  if (y == 0) return x[2] == 0 && x[3] == 0;

  const BigInt c_max = ceil_of(z[0]) + detail::sqrt_ratio_ceil(h_bound(x[2], x[3]), y);
  if (c_max > BigInt(100'000'000)) throw std::range_error("constraint prefix too long to check");
  const long long last = c_max.convert_to<long long>();
  for (long long c = 0; c <= last; ++c) {
    const Rational cr(c);
    if (h(x[2], x[3], cr) > l(z, cr) * y) return false;
  }
  return true;
}

/// The projection of M onto (x, z): the linear constraints plus
/// "z1^2 < z2 or x4 = (1 - 1/(1+z1)) x3".
inline bool in_projection(const Point<Rational>& x, const Point<Rational>& z) {
  if (!detail::linear_part(x, z)) return false;
  return z[0] * z[0] < z[1] || x[3] == (1 - Rational(1) / (1 + z[0])) * x[2];
}

/// y = max{(x4 - x3)^2, x4^2} certifies membership of every point of the projection.
inline Rational witness(const Point<Rational>& x) { return h_bound(x.at(2), x.at(3)); }

/// A_z in closed form. Boundary slices are only certified for integer z1.
inline SliceResult<Rational> slice(const Point<Rational>& z) {
  if (!in_index_set(z)) return EmptySlice{};
  HPolyhedron<Rational> a(kDimX);
  a.add_eq({1, 0, 0, 0}, z[0]);
  a.add_eq({0, 1, 0, 0}, z[1]);
  a.add_le({0, 0, 0, -1}, 0);
  a.add_le({0, 0, -1, 1}, 0);
  if (z[0] * z[0] < z[1]) return a;
  if (!is_integer(z[0])) {
    throw invalid_input("boundary slice at non-integer z1 = " + format_rational(z[0]) +
                        " is not certified: no constraint of the family pins x4/x3 there");
  }
  // (1 + z1) x4 - z1 x3 = 0
  a.add_eq({0, 0, Rational(-z[0]), Rational(1 + z[0])}, 0);
  return a;
}

inline HPolyhedron<Rational> recession_cone_at(const Point<Rational>& z) {
  const auto s = slice(z);
  const auto* poly = std::get_if<HPolyhedron<Rational>>(&s);
  if (poly == nullptr) throw infeasible_set("z is outside the index set");
  return mixrep::recession_cone(*poly);
}

/// Primitive integer direction (0, 0, 1+c, c) of the boundary slice at z = (c, c^2).
inline Point<Rational> boundary_ray(long long c) {
  if (c < 0) throw invalid_parameter("c must be nonnegative");
  return {0, 0, Rational(1 + c), Rational(c)};
}

/// Cone shared by all slices with z1^2 < z2: {x1 = x2 = 0, 0 <= x4 <= x3}.
inline HPolyhedron<Rational> interior_cone() {
  HPolyhedron<Rational> k(kDimX);
  k.add_eq({1, 0, 0, 0}, 0);
  k.add_eq({0, 1, 0, 0}, 0);
  k.add_le({0, 0, 0, -1}, 0);
  k.add_le({0, 0, -1, 1}, 0);
  return k;
}

/// The tower as a formulation with n = 4, p = 1, d = 2.
inline Formulation<Rational> make_formulation(LatticeBox sample_box = {{0, 0}, {4, 16}}) {
  Formulation<Rational> f;
  f.name = "lemma2";
  f.n = kDimX;
  f.p = kDimY;
  f.d = kDimZ;
  f.member_M = [](const Point<Rational>& x, const Point<Rational>& y, const Point<Rational>& z) {
    return y.size() == kDimY && member_M(x, y[0], z);
  };
  f.index_set.dim = kDimZ;
  f.index_set.contains = in_index_set;
  f.index_set.classify = classify;
  f.slice = slice;
  f.witness_y = [](const Point<Rational>& x, const Point<Rational>&) -> std::optional<Point<Rational>> {
    return Point<Rational>{witness(x)};
  };
  // (x1, x2) pins z exactly.
  f.candidate_box = [](const Point<Rational>& x) {
    if (x.size() != kDimX || !is_integer(x[0]) || !is_integer(x[1])) return LatticeBox::empty_box(kDimZ);
    const LatticePoint z{numerator(x[0]).convert_to<long long>(), numerator(x[1]).convert_to<long long>()};
    return LatticeBox{z, z};
  };
  f.sample_box = std::move(sample_box);
  f.tol = 0.0;
  return f;
}

}  // namespace mixrep::lemma2
