#pragma once

// Small formulations used as counter-examples and probe fixtures. Several of
// them deliberately violate convexity or slice-consistency so that the probes
// have something to catch.

#include "mixrep/formulation.hpp"
#include "mixrep/polygon.hpp"

#include <cmath>
#include <numbers>

namespace mixrep::fixtures {

namespace detail {

inline Formulation<Rational> base(std::string name, std::size_t n, std::size_t p, long long lo,
                                  long long hi) {
  Formulation<Rational> f;
  f.name = std::move(name);
  f.n = n;
  f.p = p;
  f.d = 1;
  f.index_set.dim = 1;
  f.index_set.contains = [lo, hi](const Point<Rational>& z) { return z.size() == 1 && z[0] >= lo && z[0] <= hi; };
  f.index_set.classify = [lo, hi](const Point<Rational>& z) {
    if (z.size() != 1 || z[0] < lo || z[0] > hi) return IndexClass::Outside;
    return (z[0] > lo && z[0] < hi) ? IndexClass::Interior : IndexClass::Boundary;
  };
  f.witness_y = [p](const Point<Rational>&, const Point<Rational>&) -> std::optional<Point<Rational>> {
    return Point<Rational>(p, Rational(0));
  };
  f.candidate_box = [lo, hi](const Point<Rational>&) { return LatticeBox{{lo}, {hi}}; };
  f.sample_box = {{lo}, {hi}};
  f.tol = 0.0;
  return f;
}

inline HPolyhedron<Rational> interval(const Rational& a, const Rational& b) {
  HPolyhedron<Rational> h(1);
  h.add_le({Rational(-1)}, -a);
  h.add_le({Rational(1)}, b);
  return h;
}

}  // namespace detail

/// M = {(x, y, z) : x^2 <= y z, x <= -z, 0 <= z <= 1}; A_0 = {0} while
/// A_z = (-inf, -z] for z in (0, 1].
inline Formulation<Rational> footnote() {
  auto f = detail::base("footnote", 1, 1, 0, 1);
  f.member_M = [](const Point<Rational>& x, const Point<Rational>& y, const Point<Rational>& z) {
    return x.size() == 1 && y.size() == 1 && z.size() == 1 && x[0] * x[0] <= y[0] * z[0] &&
           x[0] <= -z[0] && z[0] >= 0 && z[0] <= 1;
  };
  f.slice = [](const Point<Rational>& z) -> SliceResult<Rational> {
    if (z.size() != 1 || z[0] < 0 || z[0] > 1) return EmptySlice{};
    HPolyhedron<Rational> h(1);
    if (z[0] == 0) {
      h.add_eq({Rational(1)}, 0);
    } else {
      h.add_le({Rational(1)}, -z[0]);
    }
    return h;
  };
  f.witness_y = [](const Point<Rational>& x, const Point<Rational>& z) -> std::optional<Point<Rational>> {
    if (z.at(0) == 0) return Point<Rational>{Rational(0)};
    return Point<Rational>{Rational(x.at(0) * x.at(0) / z[0])};
  };
  return f;
}

/// Segments A_z = conv{(z, z^2), (z+1, (z+1)^2)} for integer z in [lo, hi]:
/// equal shapes with increasing slopes, not a valid formulation.
inline Formulation<Rational> parabola_segments(long long lo = -2, long long hi = 2) {
  auto f = detail::base("parabola-segments", 2, 0, lo, hi);
  auto slice = [lo, hi](const Point<Rational>& z) -> SliceResult<Rational> {
    if (z.size() != 1 || !is_integer(z[0]) || z[0] < lo || z[0] > hi) return EmptySlice{};
    const Rational a = z[0];
    const Rational slope = 2 * a + 1;
    HPolyhedron<Rational> h(2);
    h.add_eq({Rational(-slope), Rational(1)}, Rational(a * a - slope * a));
    h.add_le({Rational(-1), Rational(0)}, -a);
    h.add_le({Rational(1), Rational(0)}, Rational(a + 1));
    return h;
  };
  f.slice = slice;
  f.member_M = [slice](const Point<Rational>& x, const Point<Rational>&, const Point<Rational>& z) {
    return slice_contains(slice(z), x, 0.0);
  };
  return f;
}

/// Union of two disjoint boxes posing as M: [0,1] x {z=0} and [3,4] x {z=1}.
inline Formulation<Rational> two_boxes() {
  auto f = detail::base("two-boxes", 1, 0, 0, 1);
  auto slice = [](const Point<Rational>& z) -> SliceResult<Rational> {
    if (z.size() == 1 && z[0] == 0) return detail::interval(0, 1);
    if (z.size() == 1 && z[0] == 1) return detail::interval(3, 4);
    return EmptySlice{};
  };
  f.slice = slice;
  f.member_M = [slice](const Point<Rational>& x, const Point<Rational>&, const Point<Rational>& z) {
    return slice_contains(slice(z), x, 0.0);
  };
  return f;
}

/// z in [0, 4]: unit boxes at even z, unbounded strips at odd z. Bounded and
/// unbounded slices at interior points contradict equal support domains.
inline Formulation<Rational> mixed_domain() {
  auto f = detail::base("mixed-domain", 2, 0, 0, 4);
  auto slice = [](const Point<Rational>& z) -> SliceResult<Rational> {
    if (z.size() != 1 || !is_integer(z[0]) || z[0] < 0 || z[0] > 4) return EmptySlice{};
    const Rational a = z[0];
    HPolyhedron<Rational> h(2);
    h.add_le({Rational(-1), Rational(0)}, -a);
    h.add_le({Rational(0), Rational(-1)}, 0);
    h.add_le({Rational(0), Rational(1)}, 1);
    if (numerator(a) % 2 == 0) h.add_le({Rational(1), Rational(0)}, Rational(a + 1));
    return h;
  };
  f.slice = slice;
  f.member_M = [slice](const Point<Rational>& x, const Point<Rational>&, const Point<Rational>& z) {
    return slice_contains(slice(z), x, 0.0);
  };
  return f;
}

/// Unit-area squares centered at (z, 0): axis-aligned for even z, rotated by
/// 45 degrees for odd z.
inline std::vector<ConvexPolygon<double>> interleaved_squares(long long lo, long long hi) {
  std::vector<ConvexPolygon<double>> out;
  const double h = std::numbers::sqrt2 / 2;
  for (long long z = lo; z <= hi; ++z) {
    const double c = static_cast<double>(z);
    if (z % 2 == 0) {
      out.push_back(box_polygon<double>(c - 0.5, -0.5, c + 0.5, 0.5));
    } else {
      out.emplace_back(std::vector<Vec2<double>>{{c + h, 0}, {c, h}, {c - h, 0}, {c, -h}});
    }
  }
  return out;
}

}  // namespace mixrep::fixtures
