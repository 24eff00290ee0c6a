#pragma once

// Low-dimensional H-polyhedra: {x : a_k.x <= b_k or a_k.x = b_k}. Vertex and
// extreme-ray enumeration is exhaustive over row subsets, which is fine for
// the dimension <= 4, few-row instances this library deals with.

#include "mixrep/ext_real.hpp"
#include "mixrep/linalg.hpp"
#include "mixrep/polygon.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace mixrep {

enum class Relation { LessEq, Eq };

template <Number T>
struct Constraint {
  Point<T> normal;
  T offset;
  Relation rel = Relation::LessEq;
};

template <Number T>
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw invalid_parameter("polyhedron dimension must be positive");
  }
  HPolyhedron(std::size_t dim, std::vector<Constraint<T>> rows) : HPolyhedron(dim) {
    for (auto& r : rows) add(std::move(r));
  }

  HPolyhedron& add(Constraint<T> row) {
    if (row.normal.size() != dim_) throw invalid_input("constraint dimension mismatch");
    if (is_zero_vector(row.normal, 0.0)) throw invalid_input("constraint normal must be nonzero");
    rows_.push_back(std::move(row));
    return *this;
  }
  HPolyhedron& add_le(Point<T> a, T b) { return add({std::move(a), std::move(b), Relation::LessEq}); }
  HPolyhedron& add_eq(Point<T> a, T b) { return add({std::move(a), std::move(b), Relation::Eq}); }

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint<T>>& rows() const { return rows_; }

  bool contains(const Point<T>& x, double tol = kDefaultTol) const {
    if (x.size() != dim_) throw invalid_input("point dimension mismatch");
    for (const auto& r : rows_) {
      const T lhs = dot(r.normal, x);
      if (r.rel == Relation::Eq ? !approx_eq(lhs, r.offset, tol) : !approx_le(lhs, r.offset, tol)) {
        return false;
      }
    }
    return true;
  }

  bool is_cone() const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const Constraint<T>& r) { return near_zero(r.offset, 0.0); });
  }

  std::string str() const {
    std::ostringstream os;
    os << "{x in R^" << dim_ << " :";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      os << (k == 0 ? " " : ", ") << "(";
      for (std::size_t i = 0; i < dim_; ++i) os << (i ? "," : "") << format_number(rows_[k].normal[i]);
      os << ").x " << (rows_[k].rel == Relation::Eq ? "= " : "<= ") << format_number(rows_[k].offset);
    }
    os << "}";
    return os.str();
  }

 private:
  std::size_t dim_;
  std::vector<Constraint<T>> rows_;
};

template <Number T>
HPolyhedron<T> from_polygon(const ConvexPolygon<T>& p) {
  HPolyhedron<T> h(2);
  for (const auto& hp : p.hrep()) h.add_le({hp.normal.x, hp.normal.y}, hp.offset);
  return h;
}

/// {0} in R^dim.
template <Number T>
HPolyhedron<T> zero_cone(std::size_t dim) {
  HPolyhedron<T> h(dim);
  for (std::size_t i = 0; i < dim; ++i) h.add_eq(basis_vector<T>(dim, i), T(0));
  return h;
}

/// {lambda * dir : lambda >= 0}.
template <Number T>
HPolyhedron<T> ray_cone(const Point<T>& dir) {
  if (is_zero_vector(dir, 0.0)) throw invalid_input("ray direction must be nonzero");
  HPolyhedron<T> h(dir.size());
  for (auto& a : null_space<T>({dir}, dir.size(), 0.0)) h.add_eq(std::move(a), T(0));
  h.add_le(scale(dir, T(-1)), T(0));
  return h;
}

/// Minkowski-Weyl data: P = conv(vertices) + cone(rays) + span(lineality).
template <Number T>
struct Generators {
  std::vector<Point<T>> vertices;
  std::vector<Point<T>> rays;
  std::vector<Point<T>> lineality;

  bool empty() const { return vertices.empty(); }
  bool bounded() const { return rays.empty() && lineality.empty(); }
};

namespace detail {

template <Number T>
Point<T> normalize_direction(const Point<T>& d) {
  if constexpr (NumTraits<T>::exact) {
    const auto prim = primitive_direction(d);
    Point<T> out;
    for (const auto& k : prim) out.emplace_back(k);
    return out;
  } else {
    double m = 0.0;
    for (double v : d) m = std::max(m, std::abs(v));
    return scale(d, 1.0 / m);
  }
}

template <Number T>
bool approx_eq_point(const Point<T>& a, const Point<T>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!approx_eq(a[i], b[i], tol)) return false;
  }
  return true;
}

template <Number T>
void push_unique(std::vector<Point<T>>& out, Point<T> p, double tol) {
  for (const auto& q : out) {
    if (approx_eq_point(q, p, tol)) return;
  }
  out.push_back(std::move(p));
}

// Calls fn(indices) for every k-subset of {0..n-1}, lexicographic.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

template <Number T>
Generators<T> enumerate(const HPolyhedron<T>& p, double tol = kDefaultTol) {
  const std::size_t n = p.dim();
  Generators<T> g;

  Matrix<T> normals;
  for (const auto& r : p.rows()) normals.push_back(r.normal);
  g.lineality = normals.empty() ? std::vector<Point<T>>{} : null_space(normals, n, tol);
  if (normals.empty()) {
    for (std::size_t i = 0; i < n; ++i) g.lineality.push_back(basis_vector<T>(n, i));
  }

  // Restrict to the orthogonal complement of the lineality space.
  std::vector<Constraint<T>> rows = p.rows();
  for (const auto& l : g.lineality) rows.push_back({l, T(0), Relation::Eq});

  auto feasible = [&](const Point<T>& x, bool homogeneous) {
    for (const auto& r : rows) {
      const T lhs = dot(r.normal, x);
      const T rhs = homogeneous ? T(0) : r.offset;
      if (r.rel == Relation::Eq ? !approx_eq(lhs, rhs, tol) : !approx_le(lhs, rhs, tol)) return false;
    }
    return true;
  };

  detail::for_each_subset(rows.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix<T> a;
    Point<T> b;
    for (auto k : idx) {
      a.push_back(rows[k].normal);
      b.push_back(rows[k].offset);
    }
    if (auto x = solve_square(a, b, tol); x && feasible(*x, false)) {
      detail::push_unique(g.vertices, std::move(*x), tol);
    }
  });

  detail::for_each_subset(rows.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    Matrix<T> a;
    for (auto k : idx) a.push_back(rows[k].normal);
    auto ns = a.empty() ? std::vector<Point<T>>{basis_vector<T>(n, 0)} : null_space(a, n, tol);
    if (a.empty() && n != 1) return;
    if (ns.size() != 1) return;
    for (const T& sign : {T(1), T(-1)}) {
      Point<T> d = scale(ns[0], sign);
      if (is_zero_vector(d, tol) || !feasible(d, true)) continue;
      detail::push_unique(g.rays, detail::normalize_direction(d), tol);
    }
  });
  return g;
}

template <Number T>
bool is_empty(const HPolyhedron<T>& p, double tol = kDefaultTol) {
  return enumerate(p, tol).empty();
}

/// sup{c.x : x in P}; +inf when c increases along a recession direction.
template <Number T>
ExtReal<T> support(const Generators<T>& g, const Point<T>& c, double tol = kDefaultTol) {
  if (g.empty()) throw infeasible_set("support function of an empty set");
  for (const auto& l : g.lineality) {
    if (!near_zero(dot(c, l), tol)) return ExtReal<T>::pos_inf();
  }
  for (const auto& r : g.rays) {
    if (definitely_positive(dot(c, r), tol)) return ExtReal<T>::pos_inf();
  }
  T best = dot(c, g.vertices.front());
  for (const auto& v : g.vertices) best = std::max(best, dot(c, v));
  return ExtReal<T>(best);
}

template <Number T>
ExtReal<T> support(const HPolyhedron<T>& p, const Point<T>& c, double tol = kDefaultTol) {
  if (c.size() != p.dim()) throw invalid_input("direction dimension mismatch");
  return support(enumerate(p, tol), c, tol);
}

/// Homogenized system: same normals, zero offsets.
template <Number T>
HPolyhedron<T> recession_cone(const HPolyhedron<T>& p, double tol = kDefaultTol) {
  if (is_empty(p, tol)) throw infeasible_set("recession cone of an empty set");
  HPolyhedron<T> cone(p.dim());
  for (const auto& r : p.rows()) cone.add({r.normal, T(0), r.rel});
  return cone;
}

/// Mutual containment of two polyhedral cones, checked on generators.
template <Number T>
bool cones_equal(const HPolyhedron<T>& c, const HPolyhedron<T>& d, double tol = kDefaultTol) {
  if (!c.is_cone() || !d.is_cone()) throw invalid_input("cones_equal expects cones (zero offsets)");
  if (c.dim() != d.dim()) return false;
  const auto gc = enumerate(c, tol);
  const auto gd = enumerate(d, tol);
  if (gc.lineality.empty() && gd.lineality.empty() && gc.rays.size() == 1 && gd.rays.size() == 1) {
    // Rays are stored normalized (primitive integer vectors when exact).
    return detail::approx_eq_point(gc.rays[0], gd.rays[0], tol);
  }
  auto inside = [&](const Generators<T>& g, const HPolyhedron<T>& cone) {
    for (const auto& r : g.rays) {
      if (!cone.contains(r, tol)) return false;
    }
    for (const auto& l : g.lineality) {
      if (!cone.contains(l, tol) || !cone.contains(scale(l, T(-1)), tol)) return false;
    }
    return true;
  };
  return inside(gc, d) && inside(gd, c);
}

}  // namespace mixrep
