#include "schwarz/experiment.hpp"

#include "CLI11.hpp"

#include <cstdio>

namespace {

int print_outcome(const schwarz::ExperimentOutput& out) {
  int failures = 0;
  for (const auto& r : out.runs) {
    if (r.report.failure.empty()) {
      std::printf("%-24s converged=%d iterations=%d\n", r.id.c_str(),
                  r.report.converged, r.report.iterations);
    } else {
      std::printf("%-24s FAILED: %s\n", r.id.c_str(),
                  r.report.failure.c_str());
      ++failures;
    }
  }
  if (failures > 0)
    std::printf("%d of %zu runs failed\n", failures, out.runs.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dirichlet-Neumann coupling experiments: fixed-point Schwarz "
      "iterations with relaxation, Aitken and Anderson acceleration"};
  app.require_subcommand(1);

  std::string config_path;
  std::string trace_path;
  std::string study;
  std::string out_dir;
  int mesh = 0;

  auto* run = app.add_subcommand("run", "execute a config file");
  run->add_option("config", config_path, "JSON experiment config")->required();

  auto* compare = app.add_subcommand(
      "compare", "run every accelerator of a config at shared settings");
  compare->add_option("config", config_path, "JSON experiment config")
      ->required();

  auto* order = app.add_subcommand(
      "order", "estimate the convergence order of a trace CSV");
  order->add_option("trace", trace_path, "trace_<run>.csv file")->required();

  auto* reproduce =
      app.add_subcommand("reproduce", "run a built-in study configuration");
  reproduce
      ->add_option("study", study,
                   "one of: table1, table2, table3, table4, ndd-study")
      ->required();
  reproduce->add_option("--mesh", mesh,
                        "elements per unit square for the 2d studies");
  reproduce->add_option("--out", out_dir, "output directory override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      auto cfg = schwarz::ExperimentConfig::from_json_file(config_path);
      const auto violations = cfg.list_violations();
      if (!violations.empty()) {
        std::fprintf(stderr, "invalid config:\n");
        for (const auto& v : violations)
          std::fprintf(stderr, "  - %s\n", v.c_str());
        return 2;
      }
      return print_outcome(schwarz::run_experiment(cfg));
    }
    if (compare->parsed()) {
      auto cfg = schwarz::ExperimentConfig::from_json_file(config_path);
      return print_outcome(schwarz::compare_methods(cfg));
    }
    if (order->parsed()) {
      const auto est = schwarz::measure_convergence_order_csv(trace_path);
      std::printf("order p = %.4f, factor = %.6e\n", est.order, est.factor);
      std::printf("C_k:");
      for (double c : est.c_k) std::printf(" %.4e", c);
      std::printf("\n");
      return 0;
    }
    if (reproduce->parsed()) {
      auto cfg = schwarz::builtin_config(study, mesh);
      if (!out_dir.empty()) cfg.output_dir = out_dir;
      std::printf("writing to %s\n", cfg.output_dir.string().c_str());
      return print_outcome(schwarz::run_builtin(study, mesh, cfg.output_dir));
    }
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
  return 0;
}
