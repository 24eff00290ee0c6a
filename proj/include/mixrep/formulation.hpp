#pragma once

// Abstract mixed-integer convex formulation: a closed convex M in
// (x, y, z)-space with x in R^n, y in R^p, z in R^d. The represented set is
// the union over lattice z in the index set I = proj_z(M) of the slices
// A_z = proj_x(M restricted to z).

#include "mixrep/hpolyhedron.hpp"
#include "mixrep/polygon.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mixrep {

using LatticePoint = std::vector<long long>;

/// Closed integer box [lo, hi] in Z^d. lo > hi in any coordinate means empty.
struct LatticeBox {
  LatticePoint lo;
  LatticePoint hi;

  static LatticeBox empty_box(std::size_t d) {
    return {LatticePoint(d, 1), LatticePoint(d, 0)};
  }

  std::size_t dim() const { return lo.size(); }

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (lo[i] > hi[i]) return true;
    }
    return false;
  }

  bool contains(const LatticePoint& z) const {
    if (z.size() != lo.size()) return false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] < lo[i] || z[i] > hi[i]) return false;
    }
    return true;
  }

  bool contains(const LatticeBox& other) const {
    if (other.empty()) return true;
    return contains(other.lo) && contains(other.hi);
  }

  /// Lexicographic enumeration.
  std::vector<LatticePoint> points() const {
    std::vector<LatticePoint> out;
    if (empty() || lo.empty()) return out;
    LatticePoint z = lo;
    while (true) {
      out.push_back(z);
      std::size_t i = z.size();
      while (i > 0) {
        --i;
        if (z[i] < hi[i]) {
          ++z[i];
          for (std::size_t j = i + 1; j < z.size(); ++j) z[j] = lo[j];
          break;
        }
        if (i == 0) return out;
      }
    }
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < lo.size(); ++i) os << (i ? "x" : "") << "[" << lo[i] << "," << hi[i] << "]";
    return os.str();
  }
};

template <Number T>
Point<T> to_point(const LatticePoint& z) {
  Point<T> p;
  p.reserve(z.size());
  for (long long v : z) p.emplace_back(v);
  return p;
}

inline std::string lattice_str(const LatticePoint& z) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i];
  os << ")";
  return os.str();
}

enum class IndexClass { Interior, Boundary, Outside };

inline const char* to_string(IndexClass c) {
  switch (c) {
    case IndexClass::Interior: return "interior";
    case IndexClass::Boundary: return "boundary";
    default: return "outside";
  }
}

template <Number T>
struct IndexSet {
  std::size_t dim = 0;
  std::function<bool(const Point<T>&)> contains;
  std::function<IndexClass(const Point<T>&)> classify;

  /// I intersected with the lattice points of `box`, lexicographic.
  std::vector<LatticePoint> lattice_points(const LatticeBox& box) const {
    std::vector<LatticePoint> out;
    for (auto& z : box.points()) {
      if (contains(to_point<T>(z))) out.push_back(std::move(z));
    }
    return out;
  }
};

struct EmptySlice {};

/// A body stored as a base polygon plus a translation.
template <Number T>
struct TranslatedBody {
  ConvexPolygon<T> body;
  Vec2<T> offset;

  ConvexPolygon<T> realize() const { return translate(body, offset); }
};

template <Number T>
using SliceResult = std::variant<EmptySlice, HPolyhedron<T>, ConvexPolygon<T>, TranslatedBody<T>>;

template <Number T>
bool slice_is_empty(const SliceResult<T>& s, double tol = kDefaultTol) {
  if (std::holds_alternative<EmptySlice>(s)) return true;
  if (const auto* h = std::get_if<HPolyhedron<T>>(&s)) return is_empty(*h, tol);
  return false;
}

/// The slice as a polygon, when it is one.
template <Number T>
std::optional<ConvexPolygon<T>> slice_polygon(const SliceResult<T>& s) {
  if (const auto* p = std::get_if<ConvexPolygon<T>>(&s)) return *p;
  if (const auto* t = std::get_if<TranslatedBody<T>>(&s)) return t->realize();
  return std::nullopt;
}

/// The slice in halfspace form; nullopt when empty.
template <Number T>
std::optional<HPolyhedron<T>> slice_hpolyhedron(const SliceResult<T>& s) {
  if (const auto* h = std::get_if<HPolyhedron<T>>(&s)) return *h;
  if (auto p = slice_polygon(s)) return from_polygon(*p);
  return std::nullopt;
}

template <Number T>
bool slice_contains(const SliceResult<T>& s, const Point<T>& x, double tol = kDefaultTol) {
  if (std::holds_alternative<EmptySlice>(s)) return false;
  if (const auto* h = std::get_if<HPolyhedron<T>>(&s)) return h->contains(x, tol);
  if (x.size() != 2) throw invalid_input("polygon slice expects a 2-d point");
  return polygon_contains(*slice_polygon(s), Vec2<T>{x[0], x[1]}, tol);
}

/// Support function of a slice; empty slices map to -inf (sup of nothing).
template <Number T>
ExtReal<T> slice_support(const SliceResult<T>& s, const Point<T>& c, double tol = kDefaultTol) {
  if (slice_is_empty(s, tol)) return ExtReal<T>::neg_inf();
  if (const auto* h = std::get_if<HPolyhedron<T>>(&s)) return support(*h, c, tol);
  if (c.size() != 2) throw invalid_input("polygon slice expects a 2-d direction");
  return support(*slice_polygon(s), Vec2<T>{c[0], c[1]});
}

namespace detail {

template <Number T>
T random_weight(std::mt19937_64& rng, int lo, int hi) {
  if constexpr (NumTraits<T>::exact) {
    return T(std::uniform_int_distribution<int>(lo, hi)(rng));
  } else {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
}

}  // namespace detail

/// Random point of a nonempty slice: a random convex combination of vertices
/// plus nonnegative multiples of recession rays and lineality directions.
template <Number T>
Point<T> sample_slice_point(const SliceResult<T>& s, std::mt19937_64& rng,
                            double tol = kDefaultTol) {
  std::vector<Point<T>> verts;
  Generators<T> gens;
  if (auto p = slice_polygon(s)) {
    for (const auto& v : p->vertices()) verts.push_back({v.x, v.y});
  } else if (const auto* h = std::get_if<HPolyhedron<T>>(&s)) {
    gens = enumerate(*h, tol);
    verts = gens.vertices;
  }
  if (verts.empty()) throw infeasible_set("cannot sample an empty slice");

  Point<T> x(verts.front().size(), T(0));
  T total(0);
  for (const auto& v : verts) {
    const T w = detail::random_weight<T>(rng, 0, 8);
    x = add(x, scale(v, w));
    total += w;
  }
  if (near_zero(total, 0.0)) {
    x = verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)];
  } else {
    x = scale(x, T(T(1) / total));
  }
  for (const auto& r : gens.rays) x = add(x, scale(r, detail::random_weight<T>(rng, 0, 4)));
  for (const auto& l : gens.lineality) x = add(x, scale(l, detail::random_weight<T>(rng, -3, 3)));
  return x;
}

template <Number T>
struct Formulation {
  std::string name;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t d = 0;
  /// Indicator of M at (x, y, z).
  std::function<bool(const Point<T>&, const Point<T>&, const Point<T>&)> member_M;
  IndexSet<T> index_set;
  /// Closed-form A_z.
  std::function<SliceResult<T>(const Point<T>&)> slice;
  /// Some y with (x, y, z) in M when x is in A_z.
  std::function<std::optional<Point<T>>(const Point<T>&, const Point<T>&)> witness_y;
  /// The exact box of lattice z whose slice can contain x (possibly empty).
  std::function<LatticeBox(const Point<T>&)> candidate_box;
  /// Default lattice region used for sampling.
  LatticeBox sample_box;
  double tol = kDefaultTol;

  bool member_M_flat(const Point<T>& xyz) const {
    if (xyz.size() != n + p + d) throw invalid_input("point dimension must be n+p+d");
    const auto b = xyz.begin();
    return member_M(Point<T>(b, b + static_cast<std::ptrdiff_t>(n)),
                    Point<T>(b + static_cast<std::ptrdiff_t>(n), b + static_cast<std::ptrdiff_t>(n + p)),
                    Point<T>(b + static_cast<std::ptrdiff_t>(n + p), xyz.end()));
  }
};

/// B_z = M restricted to a fixed z, as an oracle over (x, y).
template <Number T>
struct BZCell {
  const Formulation<T>* formulation;
  LatticePoint z;

  bool contains(const Point<T>& x, const Point<T>& y) const {
    return formulation->member_M(x, y, to_point<T>(z));
  }
};

template <Number T>
BZCell<T> bz_cell(const Formulation<T>& f, LatticePoint z) {
  return {&f, std::move(z)};
}

template <Number T>
SliceResult<T> z_projected_set(const Formulation<T>& f, const Point<T>& z) {
  if (z.size() != f.d) throw invalid_input("z has the wrong dimension");
  return f.slice(z);
}

template <Number T>
struct Membership {
  bool member = false;
  std::optional<LatticePoint> z;
  Point<T> y;
  /// (x, y, z) was confirmed against the M oracle.
  bool witness_verified = false;
};

/// Membership in the represented set S = union of A_z over lattice z in I.
/// `search_box` must cover the formulation's exact candidate box for x.
template <Number T>
Membership<T> member_S(const Formulation<T>& f, const Point<T>& x, const LatticeBox& search_box) {
  if (x.size() != f.n) throw invalid_input("x has the wrong dimension");
  if (search_box.dim() != f.d) throw invalid_input("search box has the wrong dimension");
  const LatticeBox need = f.candidate_box(x);
  if (!search_box.contains(need)) {
    throw invalid_input("search box " + search_box.str() + " does not cover the candidate box " +
                        need.str() + " required for this point");
  }
  Membership<T> result;
  for (const auto& z : need.points()) {
    const auto zp = to_point<T>(z);
    if (!f.index_set.contains(zp)) continue;
    if (!slice_contains(f.slice(zp), x, f.tol)) continue;
    result.member = true;
    result.z = z;
    if (auto y = f.witness_y(x, zp)) {
      result.y = *y;
      result.witness_verified = f.member_M(x, *y, zp);
    }
    return result;
  }
  return result;
}

struct ConvexityReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violating pairs
};

/// Midpoints of random member pairs of M must be members.
template <Number T>
ConvexityReport convexity_spot_check(const Formulation<T>& f, std::size_t samples,
                                     std::uint64_t seed) {
  if (samples == 0) throw invalid_parameter("samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<LatticePoint> lattice;
  std::vector<SliceResult<T>> slices;
  for (auto& z : f.index_set.lattice_points(f.sample_box)) {
    auto s = f.slice(to_point<T>(z));
    if (slice_is_empty(s, f.tol)) continue;
    lattice.push_back(std::move(z));
    slices.push_back(std::move(s));
  }
  if (lattice.empty()) throw invalid_input("no nonempty slices in the sampling box");

  auto draw = [&](Point<T>& x, Point<T>& y, Point<T>& z) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, lattice.size() - 1)(rng);
    z = to_point<T>(lattice[k]);
    x = sample_slice_point(slices[k], rng, f.tol);
    auto w = f.witness_y(x, z);
    if (!w) throw std::logic_error("formulation " + f.name + " has no witness for a slice point");
    y = *w;
  };

  ConvexityReport report;
  report.samples = samples;
  const T half = T(1) / T(2);
  for (std::size_t s = 0; s < samples; ++s) {
    Point<T> x1, y1, z1, x2, y2, z2;
    draw(x1, y1, z1);
    draw(x2, y2, z2);
    const bool ok = f.member_M(x1, y1, z1) && f.member_M(x2, y2, z2) &&
                    f.member_M(scale(add(x1, x2), half), scale(add(y1, y2), half),
                               scale(add(z1, z2), half));
    if (!ok) {
      ++report.violations;
      if (report.examples.size() < 5) {
        std::ostringstream os;
        os << "z=(";
        for (std::size_t i = 0; i < z1.size(); ++i) os << (i ? "," : "") << format_number(z1[i]);
        os << ") w=(";
        for (std::size_t i = 0; i < z2.size(); ++i) os << (i ? "," : "") << format_number(z2[i]);
        os << ")";
        report.examples.push_back(os.str());
      }
    }
  }
  return report;
}

/// The integer direction `ray` is a recession direction of I, sampled on the
/// lattice points of `box` with steps 1, 2, 4, ..., 2^doublings.
template <Number T>
bool integer_ray_check(const IndexSet<T>& index_set, const LatticePoint& ray, const LatticeBox& box,
                       int doublings = 20) {
  bool nonzero = false;
  for (long long r : ray) nonzero = nonzero || r != 0;
  if (!nonzero || ray.size() != index_set.dim) return false;
  const auto pts = index_set.lattice_points(box);
  if (pts.empty()) return false;
  for (const auto& z : pts) {
    long long step = 1;
    for (int k = 0; k <= doublings; ++k, step *= 2) {
      LatticePoint moved = z;
      for (std::size_t i = 0; i < z.size(); ++i) moved[i] += step * ray[i];
      if (!index_set.contains(to_point<T>(moved))) return false;
    }
  }
  return true;
}

}  // namespace mixrep
