#pragma once

// Tower of regular polygons P^i + i*e1, i >= 1, with strictly increasing side
// counts. P^i is the regular g(i)-gon inscribed in the circle of radius
// r(i) = i / (2(i+1)).
//
// Each index i contributes the convex constraint
//
//   a_k . (x - z e1) <= b_k * t_i(z)   for every facet (a_k, b_k) of P^i,
//   t_i(z) = 2 l_i(z) / (r(i-1) + r(i+1)),
//
// where l_i is the line through (i-1, r(i-1)) and (i+1, r(i+1)). This is the
// cone over P^i cut at height t_i(z); at z = i the height is exactly 1.

#include "mixrep/formulation.hpp"
#include "mixrep/parallel.hpp"
#include "mixrep/polygon.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>

namespace mixrep::tower {

inline Rational r(long long i) {
  if (i < 0) throw invalid_parameter("r(i) needs i >= 0");
  return Rational(i, 2 * (i + 1));
}

/// Argument of arccos in the side-count formula:
/// (i+1)(i^2+i-1) / (i^2 (i+2)) = (r(i-1) + r(i+1)) / (2 r(i)).
inline Rational g_argument(long long i) {
  const BigInt b(i);
  return Rational((b + 1) * (b * b + b - 1), b * b * (b + 2));
}

namespace detail {

template <class Float>
Float g_quotient(const Rational& arg) {
  const Float a = Float(numerator(arg)) / Float(denominator(arg));
  return boost::math::constants::pi<Float>() / acos(a);
}

}  // namespace detail

struct SideCount {
  long long value = 0;
  /// pi/arccos(.) came within 1e-12 of an integer and was re-evaluated at 100 digits.
  bool near_integer = false;
};

/// g(i) = ceil(pi / arccos(arg(i))), evaluated with 50 significant digits.
inline SideCount g_detailed(long long i) {
  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_bin_float_50;
  if (i < 1) throw invalid_parameter("g(i) needs i >= 1");
  const Rational arg = g_argument(i);
  if (!(arg > 0 && arg < 1)) throw std::logic_error("arccos argument outside (0, 1)");

  SideCount out;
  const cpp_bin_float_50 q = detail::g_quotient<cpp_bin_float_50>(arg);
  const cpp_bin_float_50 nearest = round(q);
  if (abs(q - nearest) < cpp_bin_float_50("1e-12")) {
    out.near_integer = true;
    const cpp_bin_float_100 q2 = detail::g_quotient<cpp_bin_float_100>(arg);
    out.value = ceil(q2).convert_to<long long>();
  } else {
    out.value = ceil(q).convert_to<long long>();
  }
  return out;
}

/// Memoized g(i).
inline long long g(long long i) {
  static std::mutex mu;
  static std::map<long long, long long> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(i); it != cache.end()) return it->second;
  }
  const SideCount sc = g_detailed(i);
  if (sc.near_integer) {
    std::cerr << "warning: g(" << i << ") ceiling argument is within 1e-12 of an integer; "
              << "re-evaluated at 100 digits\n";
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(i, sc.value);
  return sc.value;
}

/// l_i(z) = ((r(i+1) - r(i-1))/2) z - ((i-1) r(i+1) - (i+1) r(i-1))/2.
inline Rational line_l(long long i, const Rational& z) {
  if (i < 1) throw invalid_parameter("l_i needs i >= 1");
  const Rational lo = r(i - 1);
  const Rational hi = r(i + 1);
  return (hi - lo) / 2 * z - (Rational(i - 1) * hi - Rational(i + 1) * lo) / 2;
}

/// Inner radius (r(i-1) + r(i+1)) / 2 that P^i must contain.
inline Rational inner_radius(long long i) { return (r(i - 1) + r(i + 1)) / 2; }

/// Cone height t_i(z) = l_i(z) / inner_radius(i); equals 1 at z = i.
inline Rational cone_height(long long i, const Rational& z) { return line_l(i, z) / inner_radius(i); }

inline ConvexPolygon<double> P(long long i) {
  return regular_polygon(static_cast<int>(g(i)), r(i).convert_to<double>());
}

/// Memoized P(i); polygons are immutable so sharing is safe.
inline const ConvexPolygon<double>& P_cached(long long i) {
  static std::mutex mu;
  static std::map<long long, std::unique_ptr<ConvexPolygon<double>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(i); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<ConvexPolygon<double>>(P(i));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(i, std::move(poly));
  return *it->second;
}

struct ConeCheck {
  bool member = false;
  /// min over facets of (b_k t - a_k.x) / |a_k|; negative means outside.
  double slack = 0.0;
};

/// Membership of (x, z) in the lifted cone of index i.
inline ConeCheck tilde_c(long long i, Vec2<double> x, const Rational& z, double tol = kDefaultTol) {
  const double t = cone_height(i, z).convert_to<double>();
  ConeCheck out;
  out.slack = std::numeric_limits<double>::infinity();
  for (const auto& hp : P_cached(i).hrep()) {
    const double s = (hp.offset * t - dot(hp.normal, x)) / norm(hp.normal);
    out.slack = std::min(out.slack, s);
  }
  out.member = t >= -tol && out.slack >= -tol;
  return out;
}

/// Candidate lattice z for x: |z - x1| <= 1/2 and z >= 1.
inline LatticeBox candidate_box(double x1) {
  const long long lo = std::max<long long>(1, static_cast<long long>(std::ceil(x1 - 0.5)));
  const long long hi = static_cast<long long>(std::floor(x1 + 0.5));
  if (lo > hi) return LatticeBox::empty_box(1);
  return {{lo}, {hi}};
}

/// Default truncation of the constraint family at z: max(i_max, ceil(z) + 2).
inline long long family_horizon(long long i_max, double z) {
  return std::max<long long>(i_max, static_cast<long long>(std::ceil(z)) + 2);
}

struct TowerMembership {
  bool member = false;
  long long z = 0;
  /// (x - z e1, z) satisfied every lifted-cone constraint i = 1..horizon.
  bool family_agrees = false;
};

inline TowerMembership member_S(Vec2<double> x, long long i_max = 2, double tol = kDefaultTol) {
  TowerMembership out;
  const auto box = candidate_box(x.x);
  for (const auto& z : box.points()) {
    const Vec2<double> local{x.x - static_cast<double>(z[0]), x.y};
    if (!polygon_contains(P_cached(z[0]), local, tol)) continue;
    out.member = true;
    out.z = z[0];
    out.family_agrees = true;
    const long long horizon = family_horizon(i_max, static_cast<double>(z[0]));
    for (long long i = 1; i <= horizon; ++i) {
      out.family_agrees = out.family_agrees && tilde_c(i, local, Rational(z[0]), tol).member;
    }
    return out;
  }
  return out;
}

struct SweepReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  /// Worst |slack| at the tight facets of P^j for the diagonal i = j.
  double max_diagonal_gap = 0.0;
  /// Failures of r(z) <= l_i(z) on integer z outside [i-1, i+1].
  std::size_t concavity_failures = 0;
  struct Cell {
    long long i;
    long long j;
    double slack;
  };
  std::vector<Cell> cells;  // off-diagonal (i, j), row-major
};

/// For all i != j checks every vertex of P^j against the lifted cone of i at
/// z = j; for i = j checks that the vertices are tight. Also checks the chord
/// inequality r(z) <= l_i(z) on integer z in [1, z_max] outside [i-1, i+1].
inline SweepReport validity_sweep(long long i_lo, long long i_hi, long long j_lo, long long j_hi,
                                  std::size_t threads = 1, long long z_max = 100,
                                  double tol = kDefaultTol) {
  if (i_lo < 1 || j_lo < 1 || i_hi < i_lo || j_hi < j_lo) throw invalid_parameter("bad sweep range");
  struct Row {
    std::vector<SweepReport::Cell> cells;
    double diag_gap = 0.0;
    std::size_t concavity_failures = 0;
  };
  const std::size_t rows = static_cast<std::size_t>(i_hi - i_lo + 1);
  auto results = parallel_map<Row>(rows, threads, [&](std::size_t k) {
    Row row;
    const long long i = i_lo + static_cast<long long>(k);
    for (long long j = j_lo; j <= j_hi; ++j) {
      double slack = std::numeric_limits<double>::infinity();
      const Rational zj(j);
      const double t = cone_height(i, zj).convert_to<double>();
      const auto& hrep = P_cached(i).hrep();
      for (const auto& v : P_cached(j).vertices()) {
        double vs = std::numeric_limits<double>::infinity();
        for (const auto& hp : hrep) vs = std::min(vs, (hp.offset * t - dot(hp.normal, v)) / norm(hp.normal));
        slack = std::min(slack, vs);
        if (i == j) row.diag_gap = std::max(row.diag_gap, std::abs(vs));
      }
      if (i != j) row.cells.push_back({i, j, slack});
    }
    for (long long z = 1; z <= z_max; ++z) {
      if (z >= i - 1 && z <= i + 1) continue;
      if (r(z) > line_l(i, Rational(z))) ++row.concavity_failures;
    }
    return row;
  });

  SweepReport rep;
  for (auto& row : results) {
    for (auto& c : row.cells) {
      ++rep.checks;
      rep.min_slack = std::min(rep.min_slack, c.slack);
      if (c.slack < -tol) ++rep.failures;
      rep.cells.push_back(c);
    }
    rep.max_diagonal_gap = std::max(rep.max_diagonal_gap, row.diag_gap);
    rep.concavity_failures += row.concavity_failures;
  }
  return rep;
}

/// The tower as a formulation with n = 2, p = 0, d = 1. The constraint family
/// is truncated at max(i_max, ceil(z) + 2).
class PolygonTower {
 public:
  explicit PolygonTower(long long i_max = 2) : i_max_(i_max) {
    if (i_max < 2) throw invalid_parameter("i_max must be >= 2");
  }

  long long i_max() const { return i_max_; }

  bool member_M(const Point<double>& x, const Point<double>& z, double tol = kDefaultTol) const {
    if (x.size() != 2 || z.size() != 1) return false;
    if (z[0] < 1 - tol) return false;
    const Vec2<double> local{x[0] - z[0], x[1]};
    const Rational zr(z[0]);
    const long long horizon = family_horizon(i_max_, z[0]);
    for (long long i = 1; i <= horizon; ++i) {
      if (!tilde_c(i, local, zr, tol).member) return false;
    }
    return true;
  }

  /// P^z + z e1 at integer z; the truncated halfplane system elsewhere.
  SliceResult<double> slice(const Point<double>& z) const {
    if (z.size() != 1 || z[0] < 1) return EmptySlice{};
    const double zz = z[0];
    if (zz == std::floor(zz)) {
      const long long i = static_cast<long long>(zz);
      return TranslatedBody<double>{P_cached(i), {zz, 0.0}};
    }
    HPolyhedron<double> h(2);
    const Rational zr(zz);
    const long long horizon = family_horizon(i_max_, zz);
    for (long long i = 1; i <= horizon; ++i) {
      const double t = cone_height(i, zr).convert_to<double>();
      for (const auto& hp : P_cached(i).hrep()) {
        h.add_le({hp.normal.x, hp.normal.y}, hp.offset * t + hp.normal.x * zz);
      }
    }
    return h;
  }

  Formulation<double> formulation(LatticeBox sample_box = {{1}, {6}}) const {
    Formulation<double> f;
    f.name = "polygon-tower";
    f.n = 2;
    f.p = 0;
    f.d = 1;
    const PolygonTower self = *this;
    f.member_M = [self](const Point<double>& x, const Point<double>&, const Point<double>& z) {
      return self.member_M(x, z);
    };
    f.index_set.dim = 1;
    f.index_set.contains = [](const Point<double>& z) { return z.size() == 1 && z[0] >= 1; };
    f.index_set.classify = [](const Point<double>& z) {
      if (z.size() != 1 || z[0] < 1) return IndexClass::Outside;
      return z[0] > 1 ? IndexClass::Interior : IndexClass::Boundary;
    };
    f.slice = [self](const Point<double>& z) { return self.slice(z); };
    f.witness_y = [](const Point<double>&, const Point<double>&) -> std::optional<Point<double>> {
      return Point<double>{};
    };
    f.candidate_box = [](const Point<double>& x) { return candidate_box(x.at(0)); };
    f.sample_box = std::move(sample_box);
    return f;
  }

 private:
  long long i_max_;
};

}  // namespace mixrep::tower
