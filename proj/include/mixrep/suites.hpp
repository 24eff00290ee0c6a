#pragma once

// Verification suites per construction. Each suite returns ProbeReports whose
// rows are in a fixed order, so reports depend only on (seed, ranges, tol).

#include "mixrep/box_tower.hpp"
#include "mixrep/fixtures.hpp"
#include "mixrep/lemma2_tower.hpp"
#include "mixrep/polygon_tower.hpp"
#include "mixrep/probes.hpp"
#include "mixrep/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace mixrep::suites {

namespace detail {

// rng() % n keeps the draws identical across standard libraries.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline ProbeRow verdict(std::string id, bool pass) {
  return ProbeRow{std::move(id), pass ? 0.0 : -1.0, pass};
}

// First `count` indices of a seeded shuffle of 0..n-1, in increasing order.
inline std::vector<std::size_t> choose(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t k = n; k > 1; --k) std::swap(idx[k - 1], idx[rng() % k]);
  idx.resize(std::min(count, n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

template <Number T>
std::vector<std::pair<Point<T>, Point<T>>> same_parity_pairs(long long lo, long long hi) {
  std::vector<std::pair<Point<T>, Point<T>>> out;
  for (long long z = lo; z <= hi; ++z) {
    for (long long w = z + 2; w <= hi; w += 2) out.push_back({{T(z)}, {T(w)}});
  }
  return out;
}

template <class Fn>
ProbeReport guarded(const std::string& construction, const std::string& probe, Fn&& fn) {
  try {
    auto rep = fn();
    rep.construction = construction;
    rep.probe = probe;
    return rep;
  } catch (const std::exception& e) {
    ProbeReport rep;
    rep.construction = construction;
    rep.probe = probe;
    rep.errors.push_back(e.what());
    return rep;
  }
}

}  // namespace detail

// ---------------------------------------------------------------- lemma2

struct Lemma2Sample {
  Point<Rational> x;
  Rational y;
  Point<Rational> z;
};

/// Seeded samples at integer z: half on the parabola z2 = z1^2, with x4 on
/// the boundary ray, inside the wedge, slightly off the ray, or outside the
/// wedge; one in ten has x1 perturbed.
inline std::vector<Lemma2Sample> lemma2_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  using detail::draw;
  std::vector<Lemma2Sample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Lemma2Sample s;
    const long long z1 = draw(rng, 0, 5);
    const long long z2 = z1 * z1 + (draw(rng, 0, 1) == 0 ? 0 : draw(rng, 1, 10));
    s.z = {Rational(z1), Rational(z2)};
    const Rational x3(draw(rng, 0, 40), draw(rng, 1, 4));
    Rational x4;
    switch (draw(rng, 0, 3)) {
      case 0: x4 = x3 * Rational(z1, z1 + 1); break;
      case 1: x4 = x3 * Rational(draw(rng, 0, 12), 12); break;
      case 2: x4 = std::clamp(Rational(x3 * Rational(z1, z1 + 1) + Rational(draw(rng, -1, 1), 97)), Rational(0), x3); break;
      default: x4 = x3 + Rational(draw(rng, 1, 8), 8); break;
    }
    Rational x1(z1);
    if (draw(rng, 0, 9) == 0) x1 += Rational(1, draw(rng, 2, 5));
    s.x = {x1, Rational(z2), x3, x4};
    s.y = Rational(draw(rng, 1, 100), 10);
    out.push_back(std::move(s));
  }
  return out;
}

/// Truncated-family membership against the projection formula and the
/// explicit witness: in_projection(x, z) == member_M(x, witness(x), z), and
/// member_M(x, y, z) implies in_projection(x, z) for the sampled y.
inline ProbeReport lemma2_membership(std::uint64_t seed, std::size_t count = 10000, std::size_t threads = 1) {
  return detail::guarded("lemma2", "membership", [&] {
    const auto samples = lemma2_samples(seed, count);
    auto rows = parallel_map<ProbeRow>(samples.size(), threads, [&](std::size_t k) {
      const auto& s = samples[k];
      const bool q = lemma2::in_projection(s.x, s.z);
      const bool w = lemma2::member_M(s.x, lemma2::witness(s.x), s.z);
      const bool m = lemma2::member_M(s.x, s.y, s.z);
      return detail::verdict("sample#" + std::to_string(k) + (q ? " in" : " out"), q == w && (!m || q));
    });
    ProbeReport rep;
    for (auto& r : rows) rep.add(std::move(r));
    return rep;
  });
}

/// `count` seeded pairs of interior lattice points with integer midpoints.
inline std::vector<std::pair<Point<Rational>, Point<Rational>>> lemma2_pairs(std::uint64_t seed,
                                                                             std::size_t count = 100) {
  const auto f = lemma2::make_formulation();
  const auto all = interior_lattice_pairs(f, f.sample_box);
  std::vector<std::pair<Point<Rational>, Point<Rational>>> out;
  for (std::size_t k : detail::choose(all.size(), count, seed)) out.push_back(all[k]);
  return out;
}

/// Seeded interior lattice points z1 in [1, 6], z2 - z1^2 in [1, 20].
inline std::vector<Point<Rational>> lemma2_interior_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Point<Rational>> out;
  for (std::size_t k = 0; k < count; ++k) {
    const long long z1 = detail::draw(rng, 1, 6);
    out.push_back({Rational(z1), Rational(z1 * z1 + detail::draw(rng, 1, 20))});
  }
  return out;
}

inline ProbeReport lemma2_convexity(std::uint64_t seed, double tol = kDefaultTol, std::size_t threads = 1,
                                    std::size_t pairs = 100, std::size_t directions = 64) {
  return detail::guarded("lemma2", "convexity", [&] {
    return midpoint_convexity_probe(lemma2::make_formulation(), integer_grid<Rational>(4, directions),
                                    lemma2_pairs(seed, pairs), tol, threads);
  });
}

inline ProbeReport lemma2_domain(std::uint64_t seed, std::size_t threads = 1, std::size_t samples = 50,
                                 std::size_t directions = 64) {
  return detail::guarded("lemma2", "domain", [&] {
    return domain_equality_probe(lemma2::make_formulation(), integer_grid<Rational>(4, directions),
                                 lemma2_interior_samples(seed + 1, samples), threads);
  });
}

/// Interior slices share one cone, and it is the wedge {x1 = x2 = 0, 0 <= x4 <= x3}.
inline ProbeReport lemma2_cones(std::uint64_t seed, std::size_t threads = 1, std::size_t samples = 100) {
  return detail::guarded("lemma2", "cones", [&] {
    const auto zs = lemma2_interior_samples(seed + 2, samples);
    auto rep = cone_constancy_probe(lemma2::make_formulation(), zs, threads);
    rep.add(detail::verdict("reference=wedge",
                            cones_equal(lemma2::recession_cone_at(zs.front()), lemma2::interior_cone())));
    return rep;
  });
}

/// Boundary slices at z = (c, c^2), c = 0..c_max: each cone is the ray
/// (0, 0, 1+c, c), and no two cones coincide.
inline ProbeReport lemma2_boundary_cones(long long c_max = 50, std::size_t threads = 1) {
  return detail::guarded("lemma2", "boundary-cones", [&] {
    const std::size_t n = static_cast<std::size_t>(c_max + 1);
    auto cones = parallel_map<std::optional<HPolyhedron<Rational>>>(n, threads, [](std::size_t c) {
      const Rational cr(static_cast<long long>(c));
      return std::optional(lemma2::recession_cone_at({cr, cr * cr}));
    });
    ProbeReport rep;
    for (std::size_t c = 0; c < n; ++c) {
      rep.add(detail::verdict("c=" + std::to_string(c) + " ray",
                              cones_equal(*cones[c], ray_cone(lemma2::boundary_ray(static_cast<long long>(c))), 0.0)));
    }
    auto rows = parallel_map<std::vector<ProbeRow>>(n, threads, [&](std::size_t a) {
      std::vector<ProbeRow> out;
      for (std::size_t b = a + 1; b < n; ++b) {
        out.push_back(detail::verdict("c=" + std::to_string(a) + " c'=" + std::to_string(b),
                                      !cones_equal(*cones[a], *cones[b], 0.0)));
      }
      return out;
    });
    for (auto& block : rows) {
      for (auto& r : block) rep.add(std::move(r));
    }
    return rep;
  });
}

// ---------------------------------------------------------- polygon tower

/// Containment and disjointness of consecutive tower polygons for i in
/// [2, i_max], monotonicity of g, and the first side counts 4, 9, 15.
inline ProbeReport tower_geometry(long long i_max, std::size_t threads = 1, double tol = 1e-12) {
  return detail::guarded("polygon-tower", "geometry", [&] {
    if (i_max < 3) throw invalid_parameter("geometry needs i_max >= 3");
    const std::size_t n = static_cast<std::size_t>(i_max - 1);
    auto rows = parallel_map<std::vector<ProbeRow>>(n, threads, [&](std::size_t k) {
      const long long i = static_cast<long long>(k) + 2;
      std::vector<ProbeRow> out;
      const std::string id = "i=" + std::to_string(i);
      const double ri = tower::r(i).convert_to<double>();
      const long long gi = tower::g(i);
      const double inner = ri * std::cos(std::numbers::pi / static_cast<double>(gi)) -
                           tower::inner_radius(i).convert_to<double>();
      out.push_back({id + " inner", inner, inner >= -tol});
      double dev = 0.0;
      for (const auto& v : tower::P_cached(i).vertices()) dev = std::max(dev, std::abs(norm(v) - ri));
      out.push_back({id + " outer", -dev, dev <= tol});
      const Rational gap = 1 - tower::r(i) - tower::r(i + 1);
      out.push_back({id + " gap", gap.convert_to<double>(), gap > 0});
      out.push_back(detail::verdict(id + " g-increasing", gi > tower::g(i - 1)));
      return out;
    });
    ProbeReport rep;
    rep.add(detail::verdict("g(1..3)=4,9,15", tower::g(1) == 4 && tower::g(2) == 9 && tower::g(3) == 15));
    for (auto& block : rows) {
      for (auto& r : block) rep.add(std::move(r));
    }
    return rep;
  });
}

/// Cross-validity of the lifted cones on [lo, hi]^2, tightness on the
/// diagonal and the chord inequality behind concavity.
inline ProbeReport tower_sweep(long long lo, long long hi, std::size_t threads = 1, double tol = kDefaultTol) {
  return detail::guarded("polygon-tower", "sweep", [&] {
    const auto sw = tower::validity_sweep(lo, hi, lo, hi, threads, 100, tol);
    ProbeReport rep;
    for (const auto& c : sw.cells) {
      rep.add({"i=" + std::to_string(c.i) + " j=" + std::to_string(c.j), c.slack, c.slack >= -tol});
    }
    rep.add({"diagonal tight", -sw.max_diagonal_gap, sw.max_diagonal_gap <= tol});
    rep.add(detail::verdict("chord r(z) <= l_i(z)", sw.concavity_failures == 0));
    return rep;
  });
}

inline ProbeReport tower_volume(long long i_lo, long long i_hi, long long i_max, double tol = kDefaultTol,
                                std::size_t threads = 1) {
  return detail::guarded("polygon-tower", "volume", [&] {
    std::vector<VolumeTriple> triples;
    for (long long i = i_lo; i <= i_hi; ++i) triples.push_back({{i - 1}, {i}, {i + 1}});
    return volume_concavity_probe(tower::PolygonTower(i_max).formulation(), triples, 2, tol, threads);
  });
}

inline ProbeReport tower_convexity(long long i_max, double tol = kDefaultTol, std::size_t threads = 1) {
  return detail::guarded("polygon-tower", "convexity", [&] {
    return midpoint_convexity_probe(tower::PolygonTower(i_max).formulation(), angular_grid(64),
                                    detail::same_parity_pairs<double>(1, i_max), tol, threads);
  });
}

/// P^1..P^i_max are pairwise combinatorially distinct.
inline ProbeReport tower_shapes(long long i_max) {
  return detail::guarded("polygon-tower", "shapes", [&] {
    std::vector<ConvexPolygon<double>> family;
    for (long long i = 1; i <= i_max; ++i) family.push_back(tower::P_cached(i));
    const auto cls = shape_classes(family, ShapeNotion::Combinatorial);
    ProbeReport rep;
    for (std::size_t k = 0; k < family.size(); ++k) {
      rep.add(detail::verdict("P^" + std::to_string(k + 1), cls.class_sizes[cls.class_of[k]] == 1));
    }
    return rep;
  });
}

// -------------------------------------------------------------- box tower

inline std::vector<Point<Rational>> box_interior(const box_tower::BoxTower& b) {
  std::vector<Point<Rational>> out;
  for (long long z = b.z_lo + 1; z < b.z_hi; ++z) out.push_back({Rational(z)});
  return out;
}

inline ProbeReport box_convexity(const box_tower::BoxTower& b, double tol = kDefaultTol, std::size_t threads = 1) {
  return detail::guarded("box-tower", "convexity", [&] {
    return midpoint_convexity_probe(b.formulation(), integer_grid<Rational>(2, 64),
                                    detail::same_parity_pairs<Rational>(b.z_lo, b.z_hi), tol, threads);
  });
}

inline ProbeReport box_domain(const box_tower::BoxTower& b, std::size_t threads = 1) {
  return detail::guarded("box-tower", "domain", [&] {
    return domain_equality_probe(b.formulation(), integer_grid<Rational>(2, 64), box_interior(b), threads);
  });
}

inline ProbeReport box_cones(const box_tower::BoxTower& b, std::size_t threads = 1) {
  return detail::guarded("box-tower", "cones", [&] {
    const auto zs = box_interior(b);
    auto rep = cone_constancy_probe(b.formulation(), zs, threads);
    const auto s = slice_hpolyhedron(b.slice(zs.front()));
    rep.add(detail::verdict("reference={0}", cones_equal(recession_cone(*s), zero_cone<Rational>(2))));
    return rep;
  });
}

inline ProbeReport box_volume(const box_tower::BoxTower& b, double tol = kDefaultTol, std::size_t threads = 1) {
  return detail::guarded("box-tower", "volume", [&] {
    std::vector<VolumeTriple> triples;
    for (long long z = b.z_lo + 1; z < b.z_hi; ++z) triples.push_back({{z - 1}, {z}, {z + 1}});
    return volume_concavity_probe(b.formulation(), triples, 2, tol, threads);
  });
}

/// All slices are translates: one class, within the 2^d parity bound.
inline ProbeReport box_shapes(const box_tower::BoxTower& b) {
  return detail::guarded("box-tower", "shapes", [&] {
    std::vector<ConvexPolygon<Rational>> family;
    std::vector<LatticePoint> keys;
    for (long long z = b.z_lo; z <= b.z_hi; ++z) {
      family.push_back(*slice_polygon(b.slice({Rational(z)})));
      keys.push_back({z});
    }
    const auto cls = translation_classes(family, keys, 0.0);
    ProbeReport rep;
    rep.add(detail::verdict("translation classes=" + std::to_string(cls.class_count()), cls.class_count() == 1));
    rep.add(detail::verdict("classes <= 2^d", cls.class_count() <= cls.parity_bound));
    return rep;
  });
}

// ------------------------------------------------------ counter-fixtures

/// Chords of the parabola over [a, a+1]: f_c fails midpoint convexity.
inline ProbeReport adversarial_convexity(double tol = kDefaultTol, std::size_t threads = 1) {
  return detail::guarded("adversarial", "convexity", [&] {
    return midpoint_convexity_probe(fixtures::parabola_segments(-2, 2), integer_grid<Rational>(2, 64),
                                    detail::same_parity_pairs<Rational>(-2, 2), tol, threads);
  });
}

/// Bounded and unbounded slices at interior z.
inline ProbeReport adversarial_domain(std::size_t threads = 1) {
  return detail::guarded("adversarial", "domain", [&] {
    return domain_equality_probe(fixtures::mixed_domain(), integer_grid<Rational>(2, 64),
                                 std::vector<Point<Rational>>{{Rational(1)}, {Rational(2)}, {Rational(3)}}, threads);
  });
}

}  // namespace mixrep::suites
