#pragma once

#include "schwarz/accel.hpp"
#include "schwarz/types.hpp"

#include <filesystem>

namespace schwarz {

enum class Backend { Laplace1D, Elasticity2D };

std::string to_string(Backend b);
std::string to_string(AcceleratorKind k);

/// Declarative description of a batch of coupling runs: one backend, one or
/// more accelerator settings, and optional parameter sweeps. Fully
/// deterministic; there is no randomness anywhere in a run.
struct ExperimentConfig {
  Backend backend = Backend::Laplace1D;

  // laplace1d decomposition
  double x_bar = 0.5;
  int n_points = 20;
  double g_init = 0.3;

  // elasticity2d decomposition
  int n_dd = 2;
  int mesh = 20;  // elements per unit-square edge
  double pull = 1.0;

  std::vector<std::pair<std::string, AcceleratorConfig>> accelerators;

  // Sweep lists; an empty list means "use the base value". Every listed
  // value is applied to every accelerator it is meaningful for.
  std::vector<double> sweep_rho;
  std::vector<double> sweep_x_bar;
  std::vector<int> sweep_m_and;
  std::vector<int> sweep_n0;
  std::vector<int> sweep_n_dd;

  ConvergenceCriteria criteria{1e-8, 1e-8, 50};
  std::filesystem::path output_dir = "out";
  bool dump_fields = false;
  bool compute_e_max = true;  // elasticity runs compare against the
                              // monolithic solve when converged

  /// Violated invariants, empty when the config is usable.
  std::vector<std::string> list_violations() const;

  static ExperimentConfig from_json_file(const std::filesystem::path& path);
  static ExperimentConfig from_json_text(const std::string& text);
};

/// One resolved parameter tuple together with its outcome.
struct RunResult {
  std::string id;
  Backend backend;
  double x_bar = 0.0;
  int n_dd = 0;
  std::string accel_label;
  AcceleratorConfig accel;
  ConvergenceReport report;
  std::vector<double> e_max;  // per subdomain, elasticity only
  double total_seconds = 0.0;
};

struct ExperimentOutput {
  std::vector<RunResult> runs;
  bool all_succeeded = true;
};

/// Expands the sweeps, executes every run, and writes iterations.csv,
/// errors.csv, one trace_<run>.csv per run, timings.csv and summary.json
/// into the output directory. Individual failures are recorded in the run
/// rows and never abort the batch.
ExperimentOutput run_experiment(const ExperimentConfig& config);

/// Runs each configured accelerator at shared settings and writes
/// comparison.csv (plus comparison_timings.csv). Requires at least one
/// accelerator; sweeps are ignored here.
ExperimentOutput compare_methods(const ExperimentConfig& config);

struct ConvergenceOrder {
  std::vector<double> c_k;  // e_{k+1} / e_k^2 over the usable window
  double order = 0.0;       // log-log slope estimate
  double factor = 0.0;      // per-iteration factor at the estimated order
};

/// Order estimate from an error sequence. The final entry and any leading
/// pre-asymptotic entries (values above `cap` or below `floor`) are
/// excluded; at least four usable points are required.
ConvergenceOrder measure_convergence_order(const std::vector<double>& errors,
                                           double cap = 1e-1,
                                           double floor = 1e-13);

/// Same, reading the e_rel column of a trace CSV written by run_experiment.
ConvergenceOrder measure_convergence_order_csv(
    const std::filesystem::path& trace_csv);

/// Built-in study configurations. `mesh` overrides the elasticity
/// resolution (0 keeps the default desk scale).
ExperimentConfig builtin_config(const std::string& name, int mesh = 0);
std::vector<std::string> builtin_config_names();

/// Executes a built-in study: the fixed-list method comparisons go through
/// compare_methods, the swept studies through run_experiment.
ExperimentOutput run_builtin(const std::string& name, int mesh = 0,
                             const std::filesystem::path& output_dir = {});

}  // namespace schwarz
