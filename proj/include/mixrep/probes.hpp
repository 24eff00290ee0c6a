#pragma once

// Necessary conditions that every valid formulation satisfies, evaluated on
// finite samples:
//
//  - f_c(z) = inf{c.x : x in A_z} is convex in z for every direction c;
//  - on the relative interior of I the finiteness pattern of f_c is constant,
//    and with it the recession cone of the slices;
//  - h(z) = Vol(A_z)^(1/n) is concave, with the Minkowski average
//    Vol(A_{z-d}/2 + A_{z+d}/2)^(1/n) sandwiched between both sides.
//
// Extended-real convention: a -inf on the right of a convexity inequality
// makes it vacuous; pairs touching an empty slice (+inf) are skipped.

#include "mixrep/formulation.hpp"
#include "mixrep/parallel.hpp"
#include "mixrep/polygon.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mixrep {

template <Number T>
struct DirectionGrid {
  std::vector<Point<T>> directions;

  std::size_t size() const { return directions.size(); }
};

/// `count` evenly spaced unit directions in the plane.
inline DirectionGrid<double> angular_grid(std::size_t count = 64) {
  DirectionGrid<double> g;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    g.directions.push_back({std::cos(a), std::sin(a)});
  }
  return g;
}

/// +-e_i for i = 1..n.
template <Number T>
DirectionGrid<T> coordinate_grid(std::size_t n) {
  DirectionGrid<T> g;
  for (std::size_t i = 0; i < n; ++i) {
    g.directions.push_back(basis_vector<T>(n, i));
    g.directions.push_back(scale(basis_vector<T>(n, i), T(-1)));
  }
  return g;
}

/// The coordinate directions followed by primitive integer vectors of
/// growing max-norm (lexicographic within a norm) until `count` are listed.
template <Number T>
DirectionGrid<T> integer_grid(std::size_t n, std::size_t count) {
  if (n == 0 || count == 0) throw invalid_parameter("integer grid needs n >= 1 and count >= 1");
  auto g = coordinate_grid<T>(n);
  if (g.size() >= count) {
    g.directions.resize(count);
    return g;
  }
  for (long long radius = 1; g.size() < count; ++radius) {
    std::vector<long long> v(n, -radius);
    while (true) {
      long long mx = 0;
      long long gcd_all = 0;
      int nonzero = 0;
      for (long long c : v) {
        mx = std::max(mx, c < 0 ? -c : c);
        gcd_all = std::gcd(gcd_all, c < 0 ? -c : c);
        nonzero += c != 0 ? 1 : 0;
      }
      if (mx == radius && gcd_all == 1 && nonzero > 1) {
        Point<T> p;
        for (long long c : v) p.emplace_back(c);
        g.directions.push_back(std::move(p));
        if (g.size() == count) break;
      }
      std::size_t i = n;
      while (i > 0 && v[i - 1] == radius) v[--i] = -radius;
      if (i == 0) break;
      ++v[i - 1];
    }
  }
  return g;
}

/// Default grid: 64 angles in the plane, coordinate directions otherwise.
inline DirectionGrid<double> standard_grid(std::size_t n) {
  return n == 2 ? angular_grid(64) : coordinate_grid<double>(n);
}

struct ProbeRow {
  std::string id;
  double slack = std::numeric_limits<double>::infinity();
  bool pass = true;
};

/// Outcome of one probe. `rows` holds one verdict per tested item.
struct ProbeReport {
  std::string construction;
  std::string probe;
  std::size_t tested = 0;
  std::vector<ProbeRow> rows;
  std::vector<ProbeRow> violations;
  std::vector<std::string> skipped;
  std::vector<std::string> errors;
  double min_slack = std::numeric_limits<double>::infinity();

  void add(ProbeRow row) {
    ++tested;
    min_slack = std::min(min_slack, row.slack);
    if (!row.pass) violations.push_back(row);
    rows.push_back(std::move(row));
  }

  bool passed() const { return violations.empty() && errors.empty(); }
};

/// f_c(z) = inf{c.x : x in A_z}: -inf when unbounded below, +inf when empty.
template <Number T>
ExtReal<T> f_c(const Formulation<T>& f, const Point<T>& c, const Point<T>& z) {
  return -slice_support(f.slice(z), scale(c, T(-1)), f.tol);
}

namespace detail {

template <Number T>
std::string point_str(const Point<T>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << format_number(p[i]);
  os << ")";
  return os.str();
}

// A slice prepared for repeated support queries: translated bodies are
// realized and polyhedra enumerated once.
template <Number T>
struct PreparedSlice {
  SliceResult<T> slice;
  std::optional<Generators<T>> gens;
  double tol = kDefaultTol;

  bool empty() const { return gens ? gens->empty() : std::holds_alternative<EmptySlice>(slice); }

  ExtReal<T> support(const Point<T>& c) const {
    if (empty()) return ExtReal<T>::neg_inf();
    if (gens) return mixrep::support(*gens, c, tol);
    return slice_support(slice, c, tol);
  }
};

template <Number T>
PreparedSlice<T> prepare(SliceResult<T> s, double tol) {
  PreparedSlice<T> out{std::move(s), std::nullopt, tol};
  if (const auto* t = std::get_if<TranslatedBody<T>>(&out.slice)) out.slice = t->realize();
  if (const auto* h = std::get_if<HPolyhedron<T>>(&out.slice)) out.gens = enumerate(*h, tol);
  return out;
}

template <Number T>
bool slack_ok(const T& slack, double tol) {
  return approx_le(T(0), slack, tol);
}

}  // namespace detail

/// f_c((z+w)/2) <= f_c(z)/2 + f_c(w)/2 for every pair and direction.
template <Number T>
ProbeReport midpoint_convexity_probe(const Formulation<T>& f, const DirectionGrid<T>& grid,
                                     const std::vector<std::pair<Point<T>, Point<T>>>& pairs,
                                     double tol = kDefaultTol, std::size_t threads = 1) {
  ProbeReport rep;
  rep.construction = f.name;
  rep.probe = "midpoint-convexity";
  struct PairResult {
    std::vector<ProbeRow> rows;
    std::string skipped;
  };
  const T half = T(1) / T(2);
  auto results = parallel_map<PairResult>(pairs.size(), threads, [&](std::size_t k) {
    PairResult out;
    const auto& [z, w] = pairs[k];
    const Point<T> mid = scale(add(z, w), half);
    const std::string pid = "z=" + detail::point_str(z) + " w=" + detail::point_str(w);
    if (!f.index_set.contains(mid)) {
      out.skipped = pid + ": midpoint outside the index set";
      return out;
    }
    const auto sz = detail::prepare(f.slice(z), f.tol);
    const auto sw = detail::prepare(f.slice(w), f.tol);
    const auto sm = detail::prepare(f.slice(mid), f.tol);
    if (sz.empty() || sw.empty()) {
      out.skipped = pid + ": empty slice";
      return out;
    }
    for (std::size_t d = 0; d < grid.size(); ++d) {
      const auto neg = scale(grid.directions[d], T(-1));
      const auto fz = -sz.support(neg);
      const auto fw = -sw.support(neg);
      const auto fm = -sm.support(neg);
      ProbeRow row;
      row.id = pid + " c#" + std::to_string(d);
      if (fz.is_neg_inf() || fw.is_neg_inf() || fm.is_neg_inf()) {
        row.slack = std::numeric_limits<double>::infinity();
      } else if (fm.is_pos_inf()) {
        row.slack = -std::numeric_limits<double>::infinity();
        row.pass = false;
      } else {
        const T slack = (fz.value() + fw.value()) * half - fm.value();
        row.slack = to_double(slack);
        row.pass = detail::slack_ok(slack, tol);
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  });
  for (auto& r : results) {
    if (!r.skipped.empty()) rep.skipped.push_back(r.skipped);
    for (auto& row : r.rows) rep.add(std::move(row));
  }
  return rep;
}

/// For each direction, f_c is finite at all samples or at none.
template <Number T>
ProbeReport domain_equality_probe(const Formulation<T>& f, const DirectionGrid<T>& grid,
                                  const std::vector<Point<T>>& samples, std::size_t threads = 1) {
  ProbeReport rep;
  rep.construction = f.name;
  rep.probe = "domain-equality";
  std::vector<detail::PreparedSlice<T>> slices;
  for (const auto& z : samples) {
    if (f.index_set.classify(z) != IndexClass::Interior) {
      rep.skipped.push_back("z=" + detail::point_str(z) + ": not interior");
      continue;
    }
    auto s = detail::prepare(f.slice(z), f.tol);
    if (s.empty()) {
      rep.skipped.push_back("z=" + detail::point_str(z) + ": empty slice");
      continue;
    }
    slices.push_back(std::move(s));
  }
  auto rows = parallel_map<ProbeRow>(grid.size(), threads, [&](std::size_t d) {
    const auto neg = scale(grid.directions[d], T(-1));
    std::size_t finite = 0;
    for (const auto& s : slices) finite += s.support(neg).is_finite() ? 1 : 0;
    ProbeRow row;
    row.id = "c#" + std::to_string(d);
    row.pass = finite == 0 || finite == slices.size();
    row.slack = row.pass ? 0.0 : -1.0;
    return row;
  });
  for (auto& row : rows) rep.add(std::move(row));
  return rep;
}

/// Every sampled slice has the recession cone of the first sample.
template <Number T>
ProbeReport cone_constancy_probe(const Formulation<T>& f, const std::vector<Point<T>>& samples,
                                 std::size_t threads = 1) {
  ProbeReport rep;
  rep.construction = f.name;
  rep.probe = "cone-constancy";
  std::vector<Point<T>> zs;
  std::vector<HPolyhedron<T>> slices;
  for (const auto& z : samples) {
    auto h = slice_hpolyhedron(f.slice(z));
    if (!h || is_empty(*h, f.tol)) {
      rep.skipped.push_back("z=" + detail::point_str(z) + ": empty slice");
      continue;
    }
    zs.push_back(z);
    slices.push_back(std::move(*h));
  }
  if (slices.empty()) return rep;
  const auto reference = recession_cone(slices.front(), f.tol);
  auto rows = parallel_map<ProbeRow>(slices.size(), threads, [&](std::size_t k) {
    ProbeRow row;
    row.id = "z=" + detail::point_str(zs[k]);
    row.pass = cones_equal(reference, recession_cone(slices[k], f.tol), f.tol);
    row.slack = row.pass ? 0.0 : -1.0;
    return row;
  });
  for (auto& row : rows) rep.add(std::move(row));
  return rep;
}

struct VolumeTriple {
  LatticePoint lower;
  LatticePoint center;
  LatticePoint upper;
};

/// Concavity of h = Vol^(1/exponent) over (z-d, z, z+d), plus the chain
/// h(z) >= Vol(A_{z-d}/2 + A_{z+d}/2)^(1/exponent) >= (h(z-d) + h(z+d))/2.
/// Row slack is the smaller of the two chain gaps.
template <Number T>
ProbeReport volume_concavity_probe(const Formulation<T>& f, const std::vector<VolumeTriple>& triples,
                                   int exponent = 2, double tol = kDefaultTol, std::size_t threads = 1) {
  ProbeReport rep;
  rep.construction = f.name;
  rep.probe = "volume-concavity";
  if (exponent <= 0) throw invalid_parameter("exponent must be positive");
  struct TripleResult {
    std::optional<ProbeRow> row;
    std::string skipped;
  };
  const double inv = 1.0 / exponent;
  auto results = parallel_map<TripleResult>(triples.size(), threads, [&](std::size_t k) {
    TripleResult out;
    const auto& t = triples[k];
    const std::string id = "z=" + lattice_str(t.lower) + "," + lattice_str(t.center) + "," + lattice_str(t.upper);
    const auto lo = slice_polygon(f.slice(to_point<T>(t.lower)));
    const auto mid = slice_polygon(f.slice(to_point<T>(t.center)));
    const auto hi = slice_polygon(f.slice(to_point<T>(t.upper)));
    if (!lo || !mid || !hi) {
      out.skipped = id + ": slice is not a bounded polygon";
      return out;
    }
    const double h_lo = std::pow(to_double(polygon_area(*lo)), inv);
    const double h_mid = std::pow(to_double(polygon_area(*mid)), inv);
    const double h_hi = std::pow(to_double(polygon_area(*hi)), inv);
    const T half = T(1) / T(2);
    const auto avg = minkowski_sum(scaled(*lo, half), scaled(*hi, half));
    const double h_avg = std::pow(to_double(polygon_area(avg)), inv);
    ProbeRow row;
    row.id = id;
    row.slack = std::min(h_mid - h_avg, h_avg - 0.5 * (h_lo + h_hi));
    row.pass = row.slack >= -tol;
    out.row = row;
    return out;
  });
  for (auto& r : results) {
    if (!r.skipped.empty()) rep.skipped.push_back(r.skipped);
    if (r.row) rep.add(std::move(*r.row));
  }
  return rep;
}

/// Every pair of lattice points (z, w) in `box` with z < w lexicographically,
/// both interior, and (z + w)/2 integral.
template <Number T>
std::vector<std::pair<Point<T>, Point<T>>> interior_lattice_pairs(const Formulation<T>& f,
                                                                  const LatticeBox& box) {
  std::vector<LatticePoint> interior;
  for (auto& z : f.index_set.lattice_points(box)) {
    if (f.index_set.classify(to_point<T>(z)) == IndexClass::Interior) interior.push_back(std::move(z));
  }
  std::vector<std::pair<Point<T>, Point<T>>> out;
  for (std::size_t a = 0; a < interior.size(); ++a) {
    for (std::size_t b = a + 1; b < interior.size(); ++b) {
      bool same_parity = true;
      for (std::size_t i = 0; i < interior[a].size(); ++i) {
        same_parity = same_parity && ((interior[a][i] - interior[b][i]) % 2 == 0);
      }
      if (same_parity) out.emplace_back(to_point<T>(interior[a]), to_point<T>(interior[b]));
    }
  }
  return out;
}

}  // namespace mixrep
