#pragma once

// Equal-volume fixture: A_z is the axis-aligned square of side `side`
// centered at (z, 0) for z in [lo, hi]. All slices are translates of one
// another, so h(z) = Vol(A_z)^(1/2) is constant.

#include "mixrep/formulation.hpp"
#include "mixrep/polygon.hpp"

namespace mixrep::box_tower {

struct BoxTower {
  Rational side = 1;
  long long z_lo = -5;
  long long z_hi = 5;

  BoxTower() = default;
  BoxTower(Rational s, long long lo, long long hi) : side(std::move(s)), z_lo(lo), z_hi(hi) {
    if (!(side > 0)) throw invalid_parameter("box side must be positive");
    if (lo > hi) throw invalid_parameter("empty z range");
  }

  ConvexPolygon<Rational> base() const {
    const Rational h = side / 2;
    return box_polygon<Rational>(-h, -h, h, h);
  }

  bool in_range(const Rational& z) const { return z >= z_lo && z <= z_hi; }

  bool member_M(const Point<Rational>& x, const Point<Rational>& z) const {
    if (x.size() != 2 || z.size() != 1 || !in_range(z[0])) return false;
    const Rational h = side / 2;
    return abs_value(Rational(x[0] - z[0])) <= h && abs_value(x[1]) <= h;
  }

  SliceResult<Rational> slice(const Point<Rational>& z) const {
    if (z.size() != 1 || !in_range(z[0])) return EmptySlice{};
    return TranslatedBody<Rational>{base(), {z[0], Rational(0)}};
  }

  Formulation<Rational> formulation() const {
    Formulation<Rational> f;
    f.name = "box-tower";
    f.n = 2;
    f.p = 0;
    f.d = 1;
    const BoxTower self = *this;
    f.member_M = [self](const Point<Rational>& x, const Point<Rational>&, const Point<Rational>& z) {
      return self.member_M(x, z);
    };
    f.index_set.dim = 1;
    f.index_set.contains = [self](const Point<Rational>& z) { return z.size() == 1 && self.in_range(z[0]); };
    f.index_set.classify = [self](const Point<Rational>& z) {
      if (z.size() != 1 || !self.in_range(z[0])) return IndexClass::Outside;
      return (z[0] > self.z_lo && z[0] < self.z_hi) ? IndexClass::Interior : IndexClass::Boundary;
    };
    f.slice = [self](const Point<Rational>& z) { return self.slice(z); };
    f.witness_y = [](const Point<Rational>&, const Point<Rational>&) -> std::optional<Point<Rational>> {
      return Point<Rational>{};
    };
    // |z - x1| <= side/2
    f.candidate_box = [self](const Point<Rational>& x) {
      const Rational h = self.side / 2;
      const long long lo = std::max(self.z_lo, ceil_of(Rational(x.at(0) - h)).convert_to<long long>());
      const long long hi = std::min(self.z_hi, floor_of(Rational(x.at(0) + h)).convert_to<long long>());
      if (lo > hi) return LatticeBox::empty_box(1);
      return LatticeBox{{lo}, {hi}};
    };
    f.sample_box = {{z_lo}, {z_hi}};
    f.tol = 0.0;
    return f;
  }
};

}  // namespace mixrep::box_tower
