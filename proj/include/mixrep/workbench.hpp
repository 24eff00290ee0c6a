#pragma once

// Batch front end: construct instances, run verification suites and export
// tables. Everything written to disk is a function of the RunConfig alone;
// wall time goes to a separate timing file.

#include "mixrep/report_io.hpp"
#include "mixrep/suites.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mixrep::workbench {

namespace fs = std::filesystem;

enum ExitCode : int { kPass = 0, kProbeFailure = 1, kConfigError = 2, kIoError = 3 };

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  long long lo = 0;
  long long hi = 0;
};

struct RunConfig {
  std::string construction = "lemma2";
  std::optional<long long> i_max;
  std::vector<Interval> z_box;
  std::vector<std::string> probes;  // empty: the full suite
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  std::string out = "out";
  std::set<std::string> formats;  // empty: command default
  Rational side = 1;
  std::size_t threads = 1;
};

inline const std::vector<std::string>& constructions() {
  static const std::vector<std::string> names{"lemma2", "polygon-tower", "box-tower", "adversarial"};
  return names;
}

/// Probe names per construction, in execution order.
inline const std::vector<std::string>& suite_of(const std::string& construction) {
  static const std::map<std::string, std::vector<std::string>> suites{
      {"lemma2", {"membership", "convexity", "domain", "cones", "boundary-cones"}},
      {"polygon-tower", {"geometry", "sweep", "convexity", "volume", "shapes"}},
      {"box-tower", {"convexity", "domain", "cones", "volume", "shapes"}},
      {"adversarial", {"convexity", "domain"}},
  };
  const auto it = suites.find(construction);
  if (it == suites.end()) throw config_error("unknown construction '" + construction + "'");
  return it->second;
}

// ------------------------------------------------------------ parsing

inline long long parse_integer(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw config_error("bad " + what + ": '" + s + "'");
  return v;
}

/// "lo:hi" or "lo:hi,lo2:hi2".
inline std::vector<Interval> parse_z_box(const std::string& text) {
  std::vector<Interval> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw config_error("z-box interval needs lo:hi, got '" + part + "'");
    Interval iv{parse_integer(part.substr(0, colon), "z-box bound"),
                parse_integer(part.substr(colon + 1), "z-box bound")};
    if (iv.lo > iv.hi) throw config_error("empty z-box interval '" + part + "'");
    out.push_back(iv);
  }
  if (out.empty() || out.size() > 2) throw config_error("z-box takes one or two intervals");
  return out;
}

/// "p", "p/q" or a finite decimal such as "0.5".
inline Rational parse_rational(const std::string& text) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(text);
    const std::string frac = text.substr(dot + 1);
    const std::string whole = text.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw config_error("");
    BigInt den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    const Rational w = (whole.empty() || whole == "-") ? Rational(0) : Rational(whole);
    const Rational f(BigInt(frac), den);
    return neg ? Rational(w - f) : Rational(w + f);
  } catch (const std::exception&) {
    throw config_error("bad rational '" + text + "'");
  }
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

/// Rejects unknown names and bad parameters before any work is done.
inline void validate(RunConfig& cfg) {
  const auto& suite = suite_of(cfg.construction);
  if (cfg.probes.size() == 1 && cfg.probes[0] == "all") cfg.probes.clear();
  if (!(cfg.probes.size() == 1 && cfg.probes[0] == "none")) {
    for (const auto& p : cfg.probes) {
      if (std::find(suite.begin(), suite.end(), p) == suite.end()) {
        throw config_error("unknown probe '" + p + "' for construction '" + cfg.construction + "'");
      }
    }
  }
  for (const auto& f : cfg.formats) {
    if (f != "json" && f != "csv" && f != "svg") throw config_error("unknown format '" + f + "'");
  }
  if (!(cfg.tol >= 0)) throw config_error("tolerance must be nonnegative");
  if (!(cfg.side > 0)) throw config_error("side must be positive");
  if (cfg.i_max) {
    const long long lo = cfg.construction == "polygon-tower" ? 3 : 0;
    if (*cfg.i_max < lo) throw config_error("i-max must be >= " + std::to_string(lo));
  }
  if (!cfg.z_box.empty()) {
    const std::size_t want = cfg.construction == "lemma2" ? 2 : 1;
    if (cfg.z_box.size() > want) throw config_error("too many z-box intervals for " + cfg.construction);
    if (cfg.construction == "lemma2" && cfg.z_box.size() == 1 && cfg.z_box[0].lo < 0) {
      throw config_error("lemma2 z-box shorthand needs lo >= 0");
    }
    if (cfg.construction == "polygon-tower" && cfg.z_box[0].lo < 1) {
      throw config_error("polygon-tower z-box needs lo >= 1");
    }
  }
  if (cfg.threads == 0) cfg.threads = 1;
}

inline std::vector<std::string> selected_probes(const RunConfig& cfg) {
  if (cfg.probes.size() == 1 && cfg.probes[0] == "none") return {};
  const auto& suite = suite_of(cfg.construction);
  std::vector<std::string> out;
  for (const auto& p : suite) {
    if (cfg.probes.empty() || std::find(cfg.probes.begin(), cfg.probes.end(), p) != cfg.probes.end()) {
      out.push_back(p);
    }
  }
  return out;
}

inline long long tower_i_max(const RunConfig& cfg) { return cfg.i_max.value_or(10); }
inline long long lemma2_c_max(const RunConfig& cfg) { return cfg.i_max.value_or(50); }

inline box_tower::BoxTower box_of(const RunConfig& cfg) {
  if (cfg.z_box.empty()) return box_tower::BoxTower(cfg.side, -5, 5);
  return box_tower::BoxTower(cfg.side, cfg.z_box[0].lo, cfg.z_box[0].hi);
}

/// Lattice box in z for lemma2; "lo:hi" means z1 in [lo, hi], z2 in [lo^2, hi^2].
inline LatticeBox lemma2_box(const RunConfig& cfg) {
  if (cfg.z_box.empty()) return {{0, 0}, {3, 9}};
  if (cfg.z_box.size() == 1) {
    const auto [lo, hi] = cfg.z_box[0];
    return {{lo, lo * lo}, {hi, hi * hi}};
  }
  return {{cfg.z_box[0].lo, cfg.z_box[1].lo}, {cfg.z_box[0].hi, cfg.z_box[1].hi}};
}

inline Interval tower_range(const RunConfig& cfg) {
  if (cfg.z_box.empty()) return {1, tower_i_max(cfg)};
  return cfg.z_box[0];
}

inline Json config_json(const RunConfig& cfg) {
  Json j;
  j["construction"] = cfg.construction;
  if (cfg.i_max) j["i_max"] = *cfg.i_max;
  j["z_box"] = Json::array();
  for (const auto& iv : cfg.z_box) j["z_box"].push_back({iv.lo, iv.hi});
  j["probes"] = selected_probes(cfg);
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["side"] = format_rational(cfg.side);
  return j;
}

// ------------------------------------------------------------ file output

inline void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw io_error("cannot create output directory " + dir.string());
}

inline void write_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw io_error("cannot write " + path.string());
  os << content;
  os.close();
  if (!os) throw io_error("write failed for " + path.string());
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct SvgScene {
  std::vector<std::vector<Vec2<double>>> polygons;
  std::vector<Vec2<double>> markers;
  std::vector<std::pair<Vec2<double>, Vec2<double>>> segments;
};

/// 100 SVG units per coordinate unit; y points up.
inline std::string render_svg(const SvgScene& scene) {
  constexpr double kScale = 100.0;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  auto grow = [&](const Vec2<double>& p) {
    if (first) {
      xmin = xmax = p.x;
      ymin = ymax = p.y;
      first = false;
    }
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& poly : scene.polygons) {
    for (const auto& v : poly) grow(v);
  }
  for (const auto& m : scene.markers) grow(m);
  for (const auto& [a, b] : scene.segments) {
    grow(a);
    grow(b);
  }
  const double margin = 0.5;
  const double w = (xmax - xmin + 2 * margin) * kScale;
  const double h = (ymax - ymin + 2 * margin) * kScale;
  auto px = [&](double x) { return format_double((x - xmin + margin) * kScale); };
  auto py = [&](double y) { return format_double((ymax - y + margin) * kScale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(w) << "\" height=\""
     << format_double(h) << "\" viewBox=\"0 0 " << format_double(w) << ' ' << format_double(h) << "\">\n";
  for (const auto& poly : scene.polygons) {
    os << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) os << (k ? " " : "") << px(poly[k].x) << ',' << py(poly[k].y);
    os << "\"/>\n";
  }
  for (const auto& [a, b] : scene.segments) {
    os << "  <line stroke=\"black\" stroke-width=\"1\" x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\""
       << px(b.x) << "\" y2=\"" << py(b.y) << "\"/>\n";
  }
  for (const auto& m : scene.markers) {
    os << "  <circle fill=\"red\" r=\"3\" cx=\"" << px(m.x) << "\" cy=\"" << py(m.y) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ------------------------------------------------------------ construct

namespace detail {

template <Number T>
Json point_json(const Point<T>& p) {
  Json j = Json::array();
  for (const auto& v : p) {
    if constexpr (NumTraits<T>::exact) {
      j.push_back(format_rational(v));
    } else {
      j.push_back(json_number(v));
    }
  }
  return j;
}

template <Number T>
Json polygon_vertices_json(const ConvexPolygon<T>& p) {
  Json j = Json::array();
  for (const auto& v : p.vertices()) j.push_back(point_json<T>({v.x, v.y}));
  return j;
}

inline Json hpoly_json(const HPolyhedron<Rational>& h) {
  Json rows = Json::array();
  for (const auto& r : h.rows()) {
    rows.push_back({{"a", point_json(r.normal)},
                    {"rel", r.rel == Relation::Eq ? "=" : "<="},
                    {"b", format_rational(r.offset)}});
  }
  const auto g = enumerate(h, 0.0);
  Json gens;
  gens["vertices"] = Json::array();
  gens["rays"] = Json::array();
  gens["lineality"] = Json::array();
  for (const auto& v : g.vertices) gens["vertices"].push_back(point_json(v));
  for (const auto& r : g.rays) gens["rays"].push_back(point_json(r));
  for (const auto& l : g.lineality) gens["lineality"].push_back(point_json(l));
  return Json{{"constraints", rows}, {"generators", gens}};
}

inline Json instance_lemma2(const RunConfig& cfg, SvgScene& scene) {
  const auto box = lemma2_box(cfg);
  Json j;
  j["metadata"] = {
      {"slices", "closed-form slices: interior wedge translate; boundary ray at integer z1"},
      {"cone_directions", "primitive boundary rays (0, 0, 1+c, c)"},
  };
  j["z_box"] = {{box.lo[0], box.hi[0]}, {box.lo[1], box.hi[1]}};
  j["slices"] = Json::array();
  std::set<long long> boundary_c;
  for (const auto& z : box.points()) {
    const auto zp = to_point<Rational>(z);
    if (!lemma2::in_index_set(zp)) continue;
    const bool parabola = z[0] * z[0] == z[1];
    if (parabola) boundary_c.insert(z[0]);
    const auto s = lemma2::slice(zp);
    const auto& h = std::get<HPolyhedron<Rational>>(s);
    Json slice;
    slice["z"] = z;
    slice["class"] = to_string(lemma2::classify(zp));
    slice["on_parabola"] = parabola;
    slice["set"] = hpoly_json(h);
    slice["recession_cone"] = hpoly_json(recession_cone(h, 0.0))["generators"];
    j["slices"].push_back(std::move(slice));
  }
  j["cone_directions"] = Json::array();
  for (long long c : boundary_c) {
    j["cone_directions"].push_back({{"c", c}, {"direction", point_json(lemma2::boundary_ray(c))}});
    // Fan in the (x3, x4)-plane, rays scaled to length 4.
    const double a = static_cast<double>(1 + c);
    const double b = static_cast<double>(c);
    const double len = std::hypot(a, b);
    scene.segments.push_back({{0, 0}, {4 * a / len, 4 * b / len}});
  }
  scene.markers.push_back({0, 0});
  return j;
}

inline Json instance_tower(const RunConfig& cfg, SvgScene& scene) {
  const auto [lo, hi] = tower_range(cfg);
  Json j;
  j["metadata"] = {
      {"r", "r(i) = i/(2(i+1)), exact"},
      {"g", "g(i) = ceil(pi / acos((i+1)(i^2+i-1)/(i^2(i+2))))"},
      {"polygon", "regular g(i)-gon of circumradius r(i), vertices at angles 2 pi k/g(i), centered at (i, 0)"},
  };
  j["polygons"] = Json::array();
  for (long long i = lo; i <= hi; ++i) {
    const auto poly = translate(tower::P_cached(i), Vec2<double>{static_cast<double>(i), 0.0});
    Json p;
    p["i"] = i;
    p["g"] = tower::g(i);
    p["r"] = format_rational(tower::r(i));
    p["center"] = {i, 0};
    p["area"] = json_number(polygon_area(tower::P_cached(i)));
    p["vertices"] = polygon_vertices_json(poly);
    j["polygons"].push_back(std::move(p));
    scene.polygons.push_back(poly.vertices());
    scene.markers.push_back({static_cast<double>(i), 0.0});
  }
  return j;
}

inline Json instance_box(const RunConfig& cfg, SvgScene& scene) {
  const auto b = box_of(cfg);
  Json j;
  j["metadata"] = {{"square", "axis-aligned square of the given side centered at (z, 0)"}};
  j["side"] = format_rational(b.side);
  j["squares"] = Json::array();
  for (long long z = b.z_lo; z <= b.z_hi; ++z) {
    const auto poly = *slice_polygon(b.slice({Rational(z)}));
    j["squares"].push_back({{"z", z}, {"vertices", polygon_vertices_json(poly)}});
    scene.polygons.push_back(to_double(poly).vertices());
    scene.markers.push_back({static_cast<double>(z), 0.0});
  }
  return j;
}

inline Json instance_adversarial(const RunConfig&, SvgScene& scene) {
  const auto f = fixtures::parabola_segments(-2, 2);
  Json j;
  j["metadata"] = {{"slices", "chord of y = x^2 over [z, z+1]; not a valid formulation"}};
  j["slices"] = Json::array();
  for (long long z = -2; z <= 2; ++z) {
    const auto h = *slice_hpolyhedron(f.slice({Rational(z)}));
    j["slices"].push_back({{"z", z}, {"set", hpoly_json(h)}});
    const auto g = enumerate(h, 0.0);
    if (g.vertices.size() == 2) {
      scene.segments.push_back({{to_double(g.vertices[0][0]), to_double(g.vertices[0][1])},
                                {to_double(g.vertices[1][0]), to_double(g.vertices[1][1])}});
    }
  }
  return j;
}

}  // namespace detail

inline int run_construct(RunConfig cfg, std::ostream& log = std::cout) {
  validate(cfg);
  if (cfg.formats.empty()) cfg.formats = {"json"};
  SvgScene scene;
  Json body;
  if (cfg.construction == "lemma2") {
    body = detail::instance_lemma2(cfg, scene);
  } else if (cfg.construction == "polygon-tower") {
    body = detail::instance_tower(cfg, scene);
  } else if (cfg.construction == "box-tower") {
    body = detail::instance_box(cfg, scene);
  } else {
    body = detail::instance_adversarial(cfg, scene);
  }
  Json j;
  j["schema"] = 1;
  j["kind"] = "instance";
  j["config"] = config_json(cfg);
  for (auto& [k, v] : body.items()) j[k] = v;

  const fs::path dir(cfg.out);
  ensure_dir(dir);
  if (cfg.formats.count("json")) write_file(dir / "instance.json", dump(j));
  if (cfg.formats.count("svg")) write_file(dir / "figure.svg", render_svg(scene));
  log << "constructed " << cfg.construction << " in " << dir.string() << "\n";
  return kPass;
}

// ------------------------------------------------------------ verify

struct VerificationSummary {
  std::string construction;
  std::vector<ProbeReport> reports;
  double wall_seconds = 0.0;

  bool passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const ProbeReport& r) { return r.passed(); });
  }
};

inline ProbeReport run_probe(const RunConfig& cfg, const std::string& probe) {
  using namespace suites;
  const auto t = cfg.threads;
  const auto tol = cfg.tol;
  if (cfg.construction == "lemma2") {
    if (probe == "membership") return lemma2_membership(cfg.seed, 10000, t);
    if (probe == "convexity") return lemma2_convexity(cfg.seed, tol, t);
    if (probe == "domain") return lemma2_domain(cfg.seed, t);
    if (probe == "cones") return lemma2_cones(cfg.seed, t);
    if (probe == "boundary-cones") return lemma2_boundary_cones(lemma2_c_max(cfg), t);
  } else if (cfg.construction == "polygon-tower") {
    const long long n = tower_i_max(cfg);
    if (probe == "geometry") return tower_geometry(n, t);
    if (probe == "sweep") return tower_sweep(1, n, t, tol);
    if (probe == "convexity") return tower_convexity(n, tol, t);
    if (probe == "volume") return tower_volume(2, n - 1, n, tol, t);
    if (probe == "shapes") return tower_shapes(n);
  } else if (cfg.construction == "box-tower") {
    const auto b = box_of(cfg);
    if (probe == "convexity") return box_convexity(b, tol, t);
    if (probe == "domain") return box_domain(b, t);
    if (probe == "cones") return box_cones(b, t);
    if (probe == "volume") return box_volume(b, tol, t);
    if (probe == "shapes") return box_shapes(b);
  } else if (cfg.construction == "adversarial") {
    if (probe == "convexity") return adversarial_convexity(tol, t);
    if (probe == "domain") return adversarial_domain(t);
  }
  throw config_error("unknown probe '" + probe + "'");
}

inline VerificationSummary verify(const RunConfig& cfg) {
  VerificationSummary s;
  s.construction = cfg.construction;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& p : selected_probes(cfg)) s.reports.push_back(run_probe(cfg, p));
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

inline Json summary_json(const RunConfig& cfg, const VerificationSummary& s) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "verification";
  j["config"] = config_json(cfg);
  j["passed"] = s.passed();
  j["probes"] = Json::array();
  for (const auto& r : s.reports) j["probes"].push_back(to_json(r));
  return j;
}

inline int run_verify(RunConfig cfg, std::ostream& log = std::cout) {
  validate(cfg);
  if (cfg.formats.empty()) cfg.formats = {"json", "csv"};
  const fs::path dir(cfg.out);
  ensure_dir(dir);
  const auto s = verify(cfg);
  for (const auto& r : s.reports) {
    log << (r.passed() ? "PASS " : "FAIL ") << cfg.construction << '/' << r.probe << " tested=" << r.tested
        << " violations=" << r.violations.size() << " errors=" << r.errors.size()
        << " min_slack=" << format_double(r.min_slack) << "\n";
    if (!r.violations.empty()) log << "  first violation: " << r.violations.front().id << "\n";
    for (const auto& e : r.errors) log << "  error: " << e << "\n";
  }
  if (cfg.formats.count("json")) {
    write_file(dir / "summary.json", dump(summary_json(cfg, s)));
    write_file(dir / "timing.json", dump(Json{{"wall_seconds", s.wall_seconds}, {"threads", cfg.threads}}));
  }
  if (cfg.formats.count("csv")) {
    ensure_dir(dir / "probes");
    for (const auto& r : s.reports) {
      std::ostringstream os;
      write_csv(os, r);
      write_file(dir / "probes" / (r.probe + ".csv"), os.str());
    }
  }
  log << (s.passed() ? "verification passed" : "verification FAILED") << "\n";
  return s.passed() ? kPass : kProbeFailure;
}

// ------------------------------------------------------------ export

inline Json read_json(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot read " + path.string());
  try {
    return Json::parse(is);
  } catch (const std::exception& e) {
    throw io_error("malformed " + path.string() + ": " + e.what());
  }
}

/// The configuration stored by an earlier run in `dir`.
inline RunConfig load_run(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw io_error("run directory " + dir.string() + " does not exist");
  fs::path src = dir / "summary.json";
  if (!fs::exists(src)) src = dir / "instance.json";
  if (!fs::exists(src)) throw io_error("no summary.json or instance.json in " + dir.string());
  const auto j = read_json(src);
  RunConfig cfg;
  try {
    const auto& c = j.at("config");
    cfg.construction = c.at("construction").get<std::string>();
    if (c.contains("i_max")) cfg.i_max = c["i_max"].get<long long>();
    for (const auto& iv : c.at("z_box")) cfg.z_box.push_back({iv[0].get<long long>(), iv[1].get<long long>()});
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.tol = c.at("tol").get<double>();
    cfg.side = parse_rational(c.at("side").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw io_error("malformed config in " + src.string() + ": " + e.what());
  }
  cfg.out = dir.string();
  return cfg;
}

inline std::string tower_table(const RunConfig& cfg) {
  std::ostringstream os;
  os << "i,r,g,area,h\n";
  const auto [lo, hi] = tower_range(cfg);
  for (long long i = lo; i <= hi; ++i) {
    const double area = polygon_area(tower::P_cached(i));
    os << i << ',' << format_rational(tower::r(i)) << ',' << tower::g(i) << ',' << format_double(area) << ','
       << format_double(std::sqrt(area)) << '\n';
  }
  return os.str();
}

inline std::string cone_table(const RunConfig& cfg) {
  std::ostringstream os;
  os << "c,d1,d2,d3,d4\n";
  const auto box = lemma2_box(cfg);
  for (long long c = std::max<long long>(box.lo[0], 0); c <= box.hi[0]; ++c) {
    if (c * c < box.lo[1] || c * c > box.hi[1]) continue;
    os << c;
    for (const auto& d : lemma2::boundary_ray(c)) os << ',' << format_rational(d);
    os << '\n';
  }
  return os.str();
}

inline std::string box_table(const RunConfig& cfg) {
  std::ostringstream os;
  os << "z,area,h\n";
  const auto b = box_of(cfg);
  for (long long z = b.z_lo; z <= b.z_hi; ++z) {
    const Rational area = polygon_area(*slice_polygon(b.slice({Rational(z)})));
    os << z << ',' << format_rational(area) << ',' << format_double(std::sqrt(to_double(area))) << '\n';
  }
  return os.str();
}

/// Slack rows of the selected probes, read back from the run's CSV files.
inline std::string slack_table(const fs::path& dir, const std::vector<std::string>& probes) {
  std::string out = kProbeCsvHeader;
  for (const auto& p : probes) {
    const fs::path src = dir / "probes" / (p + ".csv");
    if (!fs::exists(src)) continue;
    std::ifstream is(src);
    if (!is) throw io_error("cannot read " + src.string());
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) out += line + "\n";
  }
  return out;
}

/// `probes` filters the slack table; {"none"} selects nothing.
inline int run_export(const fs::path& run_dir, const std::vector<std::string>& probes,
                      std::ostream& log = std::cout) {
  RunConfig cfg = load_run(run_dir);
  cfg.probes = probes;
  validate(cfg);
  const fs::path dir = run_dir / "export";
  ensure_dir(dir);
  if (cfg.construction == "polygon-tower") write_file(dir / "tower.csv", tower_table(cfg));
  if (cfg.construction == "lemma2") write_file(dir / "cones.csv", cone_table(cfg));
  if (cfg.construction == "box-tower") write_file(dir / "squares.csv", box_table(cfg));
  write_file(dir / "slacks.csv", slack_table(run_dir, selected_probes(cfg)));
  log << "exported tables to " << dir.string() << "\n";
  return kPass;
}

/// Maps workbench errors to exit codes.
inline int guarded_main(const std::function<int()>& body, std::ostream& err = std::cerr) {
  try {
    return body();
  } catch (const config_error& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const invalid_parameter& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const io_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace mixrep::workbench
