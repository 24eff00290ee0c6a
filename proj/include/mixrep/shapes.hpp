#pragma once

// Shape notions for convex polygons, strongest to weakest: translation,
// affine and combinatorial equivalence. Homothety (Q = sP + t, s > 0) is
// decided by matching edge sequences.

#include "mixrep/formulation.hpp"
#include "mixrep/polygon.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mixrep {

template <Number T>
struct Homothety {
  T scale;
  Vec2<T> offset;
};

/// Q = s P + t for some s > 0: same edge directions in the same cyclic order
/// with one common length ratio.
template <Number T>
std::optional<Homothety<T>> homothety_test(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q,
                                           double tol = kDefaultTol) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  const auto e0 = p.edge(0);
  const T e0_sq = dot(e0, e0);
  for (std::size_t s = 0; s < n; ++s) {
    const auto f0 = q.edge(s);
    const T lambda = dot(f0, e0) / e0_sq;
    if (!definitely_positive(lambda, tol)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      ok = approx_eq(q.edge(s + k), lambda * p.edge(k), tol);
    }
    if (ok) return Homothety<T>{lambda, q.vertex(s) - lambda * p.vertex(0)};
  }
  return std::nullopt;
}

template <Number T>
bool translation_equivalent(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q,
                            double tol = kDefaultTol) {
  const auto h = homothety_test(p, q, tol);
  return h && approx_eq(h->scale, T(1), tol);
}

/// Q is the image of P under an invertible affine map. Tries every cyclic
/// correspondence in both orientations; the map is fixed by three
/// consecutive vertices and then checked on the rest.
template <Number T>
bool affine_equivalent(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q, double tol = kDefaultTol) {
  const std::size_t n = p.size();
  if (q.size() != n) return false;
  const auto u1 = p.vertex(1) - p.vertex(0);
  const auto u2 = p.vertex(2) - p.vertex(0);
  const T det_p = cross(u1, u2);  // nonzero by strict convexity
  for (int orientation : {1, -1}) {
    for (std::size_t s = 0; s < n; ++s) {
      auto idx = [&](std::size_t k) {
        return orientation > 0 ? (s + k) % n : (s + n - (k % n)) % n;
      };
      const auto w1 = q.vertex(idx(1)) - q.vertex(idx(0));
      const auto w2 = q.vertex(idx(2)) - q.vertex(idx(0));
      // Linear part A with A u1 = w1, A u2 = w2.
      const T a11 = (w1.x * u2.y - w2.x * u1.y) / det_p;
      const T a12 = (w2.x * u1.x - w1.x * u2.x) / det_p;
      const T a21 = (w1.y * u2.y - w2.y * u1.y) / det_p;
      const T a22 = (w2.y * u1.x - w1.y * u2.x) / det_p;
      if (near_zero(T(a11 * a22 - a12 * a21), tol)) continue;
      bool ok = true;
      for (std::size_t k = 3; k < n && ok; ++k) {
        const auto d = p.vertex(k) - p.vertex(0);
        const Vec2<T> image{a11 * d.x + a12 * d.y + q.vertex(idx(0)).x,
                            a21 * d.x + a22 * d.y + q.vertex(idx(0)).y};
        ok = approx_eq(image, q.vertex(idx(k)), tol);
      }
      if (ok) return true;
    }
  }
  return false;
}

/// Polygons have isomorphic face lattices iff they have the same vertex count.
template <Number T>
bool combinatorially_equivalent(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q) {
  return p.size() == q.size();
}

enum class ShapeNotion { Translation, Affine, Combinatorial };

inline const char* to_string(ShapeNotion n) {
  switch (n) {
    case ShapeNotion::Translation: return "translation";
    case ShapeNotion::Affine: return "affine";
    default: return "combinatorial";
  }
}

struct ShapeClassReport {
  ShapeNotion notion = ShapeNotion::Translation;
  std::vector<std::size_t> representatives;  // index of the first member of each class
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_of;  // per input member
  /// Distinct modulo-2 patterns among the lattice keys (translation grouping only).
  std::size_t parity_patterns = 0;
  /// 2^d for the key dimension d.
  std::size_t parity_bound = 0;

  std::size_t class_count() const { return representatives.size(); }
};

template <Number T>
bool shapes_equal(const ConvexPolygon<T>& p, const ConvexPolygon<T>& q, ShapeNotion notion,
                  double tol = kDefaultTol) {
  switch (notion) {
    case ShapeNotion::Translation: return translation_equivalent(p, q, tol);
    case ShapeNotion::Affine: return affine_equivalent(p, q, tol);
    default: return combinatorially_equivalent(p, q);
  }
}

/// Greedy partition into classes; representatives are first occurrences.
template <Number T>
ShapeClassReport shape_classes(const std::vector<ConvexPolygon<T>>& family, ShapeNotion notion,
                               double tol = kDefaultTol) {
  ShapeClassReport rep;
  rep.notion = notion;
  for (std::size_t k = 0; k < family.size(); ++k) {
    std::size_t cls = rep.representatives.size();
    for (std::size_t c = 0; c < rep.representatives.size(); ++c) {
      if (shapes_equal(family[rep.representatives[c]], family[k], notion, tol)) {
        cls = c;
        break;
      }
    }
    if (cls == rep.representatives.size()) {
      rep.representatives.push_back(k);
      rep.class_sizes.push_back(0);
    }
    ++rep.class_sizes[cls];
    rep.class_of.push_back(cls);
  }
  return rep;
}

/// Translation classes of a lattice-indexed family, with the modulo-2
/// pattern count of the keys. For an equal-volume family from a valid
/// formulation, members with equal patterns are translates, so the class
/// count is at most 2^d.
template <Number T>
ShapeClassReport translation_classes(const std::vector<ConvexPolygon<T>>& family,
                                     const std::vector<LatticePoint>& keys, double tol = kDefaultTol) {
  if (keys.size() != family.size()) throw invalid_input("one lattice key per family member required");
  auto rep = shape_classes(family, ShapeNotion::Translation, tol);
  std::set<std::vector<int>> patterns;
  std::size_t d = 0;
  for (const auto& z : keys) {
    d = std::max(d, z.size());
    std::vector<int> pat;
    for (long long v : z) pat.push_back(static_cast<int>(((v % 2) + 2) % 2));
    patterns.insert(std::move(pat));
  }
  rep.parity_patterns = patterns.size();
  rep.parity_bound = std::size_t{1} << d;
  return rep;
}

}  // namespace mixrep
