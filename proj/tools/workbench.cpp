// workbench: construct instances, verify probe suites, export tables.
//
//   workbench construct --construction polygon-tower --i-max 5 --format json,svg --out run
//   workbench verify --construction lemma2 --seed 7 --out run
//   workbench export --out run
//
// Exit status: 0 pass, 1 probe failure, 2 configuration error, 3 I/O error.

#include "mixrep/workbench.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace wb = mixrep::workbench;

int main(int argc, char** argv) {
  CLI::App app{"Mixed-integer convex representability workbench"};
  app.require_subcommand(1);

  std::string construction = "lemma2";
  long long i_max = 0;
  std::string z_box;
  std::string probes;
  std::uint64_t seed = 1;
  double tol = mixrep::kDefaultTol;
  std::string out = "out";
  std::string formats;
  std::string side = "1";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Output (or run) directory");
    sub->add_option("--probes", probes, "Comma-separated probe names, 'all' or 'none'");
  };
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--construction", construction, "lemma2 | polygon-tower | box-tower | adversarial");
    sub->add_option("--i-max", i_max, "Tower height (polygon-tower) or largest boundary c (lemma2)");
    sub->add_option("--z-box", z_box, "Integer ranges lo:hi[,lo2:hi2]");
    sub->add_option("--seed", seed, "Seed for all sampling");
    sub->add_option("--tol", tol, "Absolute slack tolerance");
    sub->add_option("--format", formats, "Comma-separated subset of json,csv,svg");
    sub->add_option("--side", side, "Box-tower side length (p, p/q or decimal)");
  };

  auto* construct = app.add_subcommand("construct", "Write an instance description");
  auto* verify = app.add_subcommand("verify", "Run the probe suite");
  auto* exporter = app.add_subcommand("export", "Emit CSV tables from a run directory");
  for (auto* sub : {construct, verify}) {
    add_common(sub);
    add_config(sub);
  }
  add_common(exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : wb::kConfigError;
  }

  return wb::guarded_main([&]() -> int {
    if (exporter->parsed()) return wb::run_export(out, wb::split_list(probes));

    wb::RunConfig cfg;
    cfg.construction = construction;
    auto* sub = construct->parsed() ? construct : verify;
    if (sub->count("--i-max") > 0) cfg.i_max = i_max;
    if (!z_box.empty()) cfg.z_box = wb::parse_z_box(z_box);
    cfg.probes = wb::split_list(probes);
    cfg.seed = seed;
    cfg.tol = tol;
    cfg.out = out;
    for (const auto& f : wb::split_list(formats)) cfg.formats.insert(f);
    cfg.side = wb::parse_rational(side);
    cfg.threads = mixrep::worker_count_from_env();
    return construct->parsed() ? wb::run_construct(cfg) : wb::run_verify(cfg);
  });
}
