// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
//   acceptance <scratch-dir>

#include "../unit/oracles.hpp"
#include "mixrep/fixtures.hpp"
#include "mixrep/shapes.hpp"
#include "mixrep/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace mixrep;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (" << detail << ")" << std::endl;
  if (!ok) ++failures;
}

std::string summary(const ProbeReport& r) {
  std::ostringstream os;
  os << r.probe << " tested=" << r.tested << " violations=" << r.violations.size() << " errors=" << r.errors.size()
     << " min_slack=" << format_double(r.min_slack);
  return os.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

using Poly = ConvexPolygon<double>;
using V = Vec2<double>;

void criterion1() {
  const auto boundary = suites::lemma2_boundary_cones(50);
  const auto interior = suites::lemma2_cones(1, 1, 100);
  report(1, "lemma2 recession cones", boundary.passed() && interior.passed() && boundary.tested == 51 + 51 * 50 / 2 &&
                                          interior.tested == 101,
         summary(boundary) + "; " + summary(interior));
}

void criterion2() {
  const auto r = suites::lemma2_membership(1, 10000);
  report(2, "lemma2 membership equivalence", r.passed() && r.tested == 10000, summary(r));
}

void criterion3() {
  const auto conv = suites::lemma2_convexity(1, 1e-9, 1, 100, 64);
  const auto dom = suites::lemma2_domain(1, 1, 50, 64);
  const auto f = fixtures::footnote();
  const Point<Rational> c{Rational(1)};
  bool foot = f_c(f, c, Point<Rational>{Rational(0)}) == ExtReal<Rational>(Rational(0));
  for (const auto& z : {Rational(1, 4), Rational(1, 2), Rational(1)}) foot = foot && f_c(f, c, Point<Rational>{z}).is_neg_inf();
  report(3, "lemma2 support-function probes",
         conv.passed() && conv.tested == 100 * 64 && dom.passed() && foot,
         summary(conv) + "; " + summary(dom) + "; footnote " + (foot ? "ok" : "mismatch"));
}

void criterion4() {
  const auto r = suites::tower_geometry(100);
  report(4, "polygon tower geometry i=2..100", r.passed(), summary(r));
}

void criterion5() {
  const auto r = suites::tower_sweep(1, 40);
  report(5, "polygon tower validity sweep 1..40", r.passed(), summary(r));
}

void criterion6() {
  const auto box = suites::box_volume(box_tower::BoxTower{});
  double box_dev = 0;
  for (const auto& row : box.rows) box_dev = std::max(box_dev, std::abs(row.slack));
  const auto tower = suites::tower_volume(2, 50, 51, 1e-9);
  report(6, "volume concavity", box.passed() && box_dev <= 1e-12 && tower.passed() && tower.tested == 49,
         summary(box) + " max|slack|=" + format_double(box_dev) + "; " + summary(tower));
}

void criterion7() {
  const auto sq = Poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto moved = translate(sq, V{3, -2});
  auto gap = [](const Poly& a, const Poly& b) {
    const auto mid = minkowski_sum(scaled(a, 0.5), scaled(b, 0.5));
    return std::sqrt(polygon_area(mid)) - 0.5 * std::sqrt(polygon_area(a)) - 0.5 * std::sqrt(polygon_area(b));
  };
  const double eq_gap = gap(sq, moved);
  const bool eq_ok = std::abs(eq_gap) <= 1e-12 && homothety_test(sq, moved).has_value();

  const auto tri = Poly({{0, 0}, {2, 0}, {0, 1}});
  const double vol = polygon_area(minkowski_sum(scaled(sq, 0.5), scaled(tri, 0.5)));
  const double oracle_vol = oracle::shoelace(oracle::minkowski_hull(scaled(sq, 0.5), scaled(tri, 0.5)));
  const double strict_gap = gap(sq, tri);
  const bool strict_ok = std::abs(vol - 1.25) <= 1e-9 && std::abs(oracle_vol - 1.25) <= 1e-9 && strict_gap >= 0.1 &&
                         !homothety_test(sq, tri).has_value();

  const auto box = suites::box_shapes(box_tower::BoxTower{});
  const auto squares = fixtures::interleaved_squares(-3, 3);
  std::vector<LatticePoint> keys;
  for (long long z = -3; z <= 3; ++z) keys.push_back({z});
  const auto two = translation_classes(squares, keys);
  const bool classes_ok = box.passed() && two.class_count() == 2 && two.class_count() <= two.parity_bound;

  std::ostringstream os;
  os << "equal gap=" << format_double(eq_gap) << " vol=" << format_double(vol) << " strict gap="
     << format_double(strict_gap) << " box " << (box.passed() ? "1 class" : "failed") << " fixture classes="
     << two.class_count() << "/" << two.parity_bound;
  report(7, "Brunn-Minkowski equality and homothety", eq_ok && strict_ok && classes_ok, os.str());
}

void criterion8() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> mode(0, 3);
  std::uniform_int_distribution<int> shift(-5, 5);
  std::size_t broken = 0, translations = 0, affines = 0;
  for (int k = 0; k < 500; ++k) {
    const auto p = oracle::random_polygon(rng, 6, 6);
    Poly q = p;
    switch (mode(rng)) {
      case 0: q = translate(p, V{double(shift(rng)), double(shift(rng))}); break;
      case 1: q = translate(scaled(p, 3.0), V{double(shift(rng)), 1}); break;
      case 2: q = oracle::random_polygon(rng, 6, 6); break;
      default: break;
    }
    const bool t = translation_equivalent(p, q);
    const bool a = affine_equivalent(p, q);
    const bool c = combinatorially_equivalent(p, q);
    translations += t;
    affines += a;
    if ((t && !a) || (a && !c)) ++broken;
  }
  const auto shapes = suites::tower_shapes(10);
  std::ostringstream os;
  os << "pairs=500 translation=" << translations << " affine=" << affines << " broken=" << broken << "; "
     << summary(shapes);
  report(8, "shape hierarchy", broken == 0 && shapes.passed() && shapes.tested == 10, os.str());
}

void criterion9(const fs::path& scratch) {
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const std::vector<std::string> threads{"1", "4"};
  bool ran = true;
  for (const auto& t : threads) {
    const std::string cmd = "WORKBENCH_THREADS=" + t + " \"" WORKBENCH_BIN "\" verify --construction lemma2 --seed 7 --out \"" +
                            (scratch / t).string() + "\" > /dev/null";
    ran = ran && std::system(cmd.c_str()) == 0;
  }
  bool same = ran;
  std::size_t files = 0;
  if (ran) {
    std::vector<fs::path> rel{"summary.json"};
    for (const auto& e : fs::directory_iterator(scratch / "1" / "probes")) rel.push_back("probes" / e.path().filename());
    for (const auto& r : rel) {
      const auto a = slurp(scratch / "1" / r);
      same = same && !a.empty() && a == slurp(scratch / "4" / r);
      ++files;
    }
  }
  report(9, "deterministic reports across thread counts", same,
         ran ? std::to_string(files) + " files compared" : "verify run failed");
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "acceptance_runs";
  const auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(scratch);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
            << format_double(secs) << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
