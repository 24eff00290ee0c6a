#pragma once

#include "mixrep/ext_real.hpp"
#include "mixrep/linalg.hpp"
#include "mixrep/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace mixrep {

template <Number T>
struct Vec2 {
  T x{0};
  T y{0};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) = default;
};

template <Number T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <Number T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

template <Number T>
double norm(const Vec2<T>& a) {
  return std::hypot(to_double(a.x), to_double(a.y));
}

template <Number T>
bool approx_eq(const Vec2<T>& a, const Vec2<T>& b, double tol = kDefaultTol) {
  return approx_eq(a.x, b.x, tol) && approx_eq(a.y, b.y, tol);
}

template <Number T>
Vec2<double> to_double(const Vec2<T>& v) {
  return {to_double(v.x), to_double(v.y)};
}

namespace detail {

// Half-plane index for exact angular ordering: [0, pi) -> 0, [pi, 2pi) -> 1.
template <Number T>
int angle_half(const Vec2<T>& v) {
  return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0;
}

template <Number T>
bool angle_less(const Vec2<T>& a, const Vec2<T>& b) {
  const int ha = angle_half(a);
  const int hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Relative collinearity test: |sin(angle)| <= tol.
template <Number T>
bool turn_is_flat(const Vec2<T>& e1, const Vec2<T>& e2, double tol) {
  const T c = cross(e1, e2);
  if constexpr (NumTraits<T>::exact) {
    return c == 0;
  } else {
    return std::abs(c) <= tol * norm(e1) * norm(e2);
  }
}

}  // namespace detail

/// Halfspace a.x <= b.
template <Number T>
struct HalfPlane {
  Vec2<T> normal;
  T offset;
};

/// Strictly convex polygon with counterclockwise vertices.
///
/// Construction canonicalizes the input cycle: near-duplicate vertices are
/// merged, collinear vertices dropped and clockwise input reversed. Anything
/// that is still not a strictly convex cycle with at least three vertices is
/// rejected with `invalid_input`.
template <Number T>
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Vec2<T>> vertices, double tol = kDefaultTol) : tol_(tol) {
    canonicalize(vertices);
    vertices_ = std::move(vertices);
    build_hrep();
  }

  const std::vector<Vec2<T>>& vertices() const { return vertices_; }
  const std::vector<HalfPlane<T>>& hrep() const { return hrep_; }
  std::size_t size() const { return vertices_.size(); }
  double tol() const { return tol_; }

  const Vec2<T>& vertex(std::size_t k) const { return vertices_[k % vertices_.size()]; }
  Vec2<T> edge(std::size_t k) const { return vertex(k + 1) - vertex(k); }

 private:
  void canonicalize(std::vector<Vec2<T>>& v) const {
    std::vector<Vec2<T>> dedup;
    for (const auto& p : v) {
      if (dedup.empty() || !approx_eq(dedup.back(), p, tol_)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && approx_eq(dedup.front(), dedup.back(), tol_)) dedup.pop_back();

    bool changed = true;
    while (changed && dedup.size() >= 3) {
      changed = false;
      for (std::size_t k = 0; k < dedup.size(); ++k) {
        const auto& prev = dedup[(k + dedup.size() - 1) % dedup.size()];
        const auto& next = dedup[(k + 1) % dedup.size()];
        if (detail::turn_is_flat(dedup[k] - prev, next - dedup[k], tol_)) {
          dedup.erase(dedup.begin() + static_cast<std::ptrdiff_t>(k));
          changed = true;
          break;
        }
      }
    }
    if (dedup.size() < 3) throw invalid_input("degenerate polygon: fewer than 3 distinct vertices");

    T twice_area(0);
    for (std::size_t k = 0; k < dedup.size(); ++k) {
      twice_area += cross(dedup[k], dedup[(k + 1) % dedup.size()]);
    }
    if (twice_area < 0) std::reverse(dedup.begin(), dedup.end());

    const std::size_t n = dedup.size();
    std::size_t descents = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto e1 = dedup[(k + 1) % n] - dedup[k];
      const auto e2 = dedup[(k + 2) % n] - dedup[(k + 1) % n];
      if (!(cross(e1, e2) > 0)) throw invalid_input("polygon is not strictly convex");
      if (!detail::angle_less(e1, e2)) ++descents;
    }
    // A convex cycle turns exactly once around.
    if (descents != 1) throw invalid_input("vertex cycle winds more than once");
    v = std::move(dedup);
  }

  void build_hrep() {
    hrep_.clear();
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      const auto e = edge(k);
      Vec2<T> a{e.y, T(-e.x)};
      hrep_.push_back({a, dot(a, vertices_[k])});
    }
  }

  std::vector<Vec2<T>> vertices_;
  std::vector<HalfPlane<T>> hrep_;
  double tol_;
};

/// Regular m-gon with vertices at angles 2*pi*k/m, k = 1..m.
inline ConvexPolygon<double> regular_polygon(int m, double radius, Vec2<double> center = {},
                                             double tol = kDefaultTol) {
  if (m < 3) throw invalid_parameter("regular polygon needs at least 3 sides");
  if (!(radius > 0)) throw invalid_parameter("regular polygon radius must be positive");
  std::vector<Vec2<double>> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / m;
    v.push_back({center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
  }
  return ConvexPolygon<double>(std::move(v), tol);
}

template <Number T>
bool polygon_contains(const ConvexPolygon<T>& p, const Vec2<T>& x, double tol = kDefaultTol) {
  return std::all_of(p.hrep().begin(), p.hrep().end(), [&](const HalfPlane<T>& h) {
    return approx_le(dot(h.normal, x), h.offset, tol);
  });
}

/// Smallest facet distance from the origin (inradius about the origin).
template <Number T>
double apothem(const ConvexPolygon<T>& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& h : p.hrep()) best = std::min(best, to_double(h.offset) / norm(h.normal));
  return best;
}

/// True iff the disc of radius rho about the origin lies in P.
template <Number T>
bool ball_in_polygon(const ConvexPolygon<T>& p, double rho, double tol = kDefaultTol) {
  for (const auto& h : p.hrep()) {
    if (!definitely_positive(h.offset, tol)) {
      throw invalid_input("origin is not interior to the polygon");
    }
  }
  return apothem(p) >= rho - tol;
}

template <Number T>
double circumradius(const ConvexPolygon<T>& p) {
  double best = 0.0;
  for (const auto& v : p.vertices()) best = std::max(best, norm(v));
  return best;
}

/// True iff P lies in the disc of radius rho about the origin.
template <Number T>
bool polygon_in_ball(const ConvexPolygon<T>& p, const T& rho, double tol = kDefaultTol) {
  if constexpr (NumTraits<T>::exact) {
    return std::all_of(p.vertices().begin(), p.vertices().end(),
                       [&](const Vec2<T>& v) { return dot(v, v) <= rho * rho; });
  } else {
    return circumradius(p) <= rho + tol;
  }
}

template <Number T>
T polygon_area(const ConvexPolygon<T>& p) {
  T twice(0);
  for (std::size_t k = 0; k < p.size(); ++k) twice += cross(p.vertex(k), p.vertex(k + 1));
  return twice / T(2);
}

template <Number T>
Vec2<T> vertex_centroid(const ConvexPolygon<T>& p) {
  Vec2<T> s{};
  for (const auto& v : p.vertices()) s = s + v;
  const T n(static_cast<long long>(p.size()));
  return {s.x / n, s.y / n};
}

template <Number T>
ConvexPolygon<T> translate(const ConvexPolygon<T>& p, const Vec2<T>& t) {
  std::vector<Vec2<T>> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(q + t);
  return ConvexPolygon<T>(std::move(v), p.tol());
}

template <Number T>
ConvexPolygon<T> scaled(const ConvexPolygon<T>& p, const T& s) {
  if (!(s > 0)) throw invalid_parameter("scale factor must be positive");
  std::vector<Vec2<T>> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(s * q);
  return ConvexPolygon<T>(std::move(v), p.tol());
}

template <Number T>
ExtReal<T> support(const ConvexPolygon<T>& p, const Vec2<T>& c) {
  T best = dot(c, p.vertex(0));
  for (const auto& v : p.vertices()) best = std::max(best, dot(c, v));
  return ExtReal<T>(best);
}

/// P + Q by merging the two edge sequences in angular order.
template <Number T>
ConvexPolygon<T> minkowski_sum(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q) {
  auto lowest = [](const ConvexPolygon<T>& poly) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < poly.size(); ++k) {
      const auto& a = poly.vertex(k);
      const auto& b = poly.vertex(best);
      if (a.y < b.y || (a.y == b.y && a.x < b.x)) best = k;
    }
    return best;
  };
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  const std::size_t sp = lowest(p);
  const std::size_t sq = lowest(q);
  const double tol = std::max(p.tol(), q.tol());

  std::vector<Vec2<T>> out;
  out.reserve(n + m);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    out.push_back(p.vertex(sp + i) + q.vertex(sq + j));
    const auto ep = p.edge(sp + i);
    const auto eq = q.edge(sq + j);
    int turn = 0;
    if (i == n) {
      turn = -1;
    } else if (j == m) {
      turn = 1;
    } else if (detail::turn_is_flat(ep, eq, tol) && dot(ep, eq) > 0) {
      turn = 0;
    } else {
      turn = detail::angle_less(ep, eq) ? 1 : -1;
    }
    if (turn >= 0) ++i;
    if (turn <= 0) ++j;
  }
  return ConvexPolygon<T>(std::move(out), tol);
}

/// P + {t}.
template <Number T>
ConvexPolygon<T> minkowski_sum(const ConvexPolygon<T>& p, const Vec2<T>& t) {
  return translate(p, t);
}

template <Number T>
ConvexPolygon<double> to_double(const ConvexPolygon<T>& p, double tol = kDefaultTol) {
  std::vector<Vec2<double>> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(to_double(q));
  return ConvexPolygon<double>(std::move(v), tol);
}

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
template <Number T>
ConvexPolygon<T> box_polygon(const T& x0, const T& y0, const T& x1, const T& y1,
                             double tol = kDefaultTol) {
  return ConvexPolygon<T>({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, tol);
}

}  // namespace mixrep
