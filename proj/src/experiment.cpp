#include "schwarz/experiment.hpp"

#include "schwarz/laplace1d.hpp"
#include "schwarz/multidomain.hpp"
#include "schwarz/schwarz_loop.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace schwarz {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += fmt(v[i]);
  }
  return out;
}

AcceleratorKind parse_kind(const std::string& s) {
  if (s == "unrelaxed") return AcceleratorKind::Unrelaxed;
  if (s == "classical") return AcceleratorKind::Classical;
  if (s == "aitken") return AcceleratorKind::Aitken;
  if (s == "anderson") return AcceleratorKind::Anderson;
  throw std::invalid_argument("unknown accelerator kind: " + s);
}

AcceleratorConfig accel_from_json(const json& j) {
  AcceleratorConfig a;
  a.kind = parse_kind(j.at("kind").get<std::string>());
  a.rho = j.value("rho", a.rho);
  a.rho_init = j.value("rho_init", a.rho_init);
  a.n0 = j.value("n0", a.n0);
  a.m_and = j.value("m_and", a.m_and);
  a.memory_adaptation = j.value("memory_adaptation", a.memory_adaptation);
  a.m_bar = j.value("m_bar", a.m_bar);
  a.eps_and = j.value("eps_and", a.eps_and);
  return a;
}

json accel_to_json(const AcceleratorConfig& a) {
  return json{{"kind", to_string(a.kind)},
              {"rho", a.rho},
              {"rho_init", a.rho_init},
              {"n0", a.n0},
              {"m_and", a.m_and},
              {"memory_adaptation", a.memory_adaptation},
              {"m_bar", a.m_bar},
              {"eps_and", a.eps_and}};
}

std::string default_label(const AcceleratorConfig& a) {
  std::string s = to_string(a.kind);
  if (a.kind == AcceleratorKind::Anderson && a.memory_adaptation)
    s += "_adaptive";
  return s;
}

// Parameter tuple for one resolved run.
struct RunSpec {
  double x_bar;
  int n_dd;
  std::string label;
  AcceleratorConfig accel;
};

std::vector<RunSpec> expand(const ExperimentConfig& cfg) {
  std::vector<double> xbars = cfg.sweep_x_bar.empty()
                                  ? std::vector<double>{cfg.x_bar}
                                  : cfg.sweep_x_bar;
  std::vector<int> ndds = cfg.sweep_n_dd.empty() ? std::vector<int>{cfg.n_dd}
                                                 : cfg.sweep_n_dd;
  if (cfg.backend == Backend::Laplace1D) ndds = {2};
  if (cfg.backend == Backend::Elasticity2D) xbars = {0.0};

  std::vector<RunSpec> specs;
  for (double xb : xbars)
    for (int nd : ndds)
      for (const auto& [label, base] : cfg.accelerators) {
        // Only the sweep lists meaningful for this kind fan out, so that
        // sweeping one method's knob never duplicates another method's run.
        std::vector<AcceleratorConfig> variants{base};
        auto fan = [&](auto&& apply, const auto& values) {
          if (values.empty()) return;
          std::vector<AcceleratorConfig> next;
          for (const auto& v : variants)
            for (const auto& value : values) {
              AcceleratorConfig a = v;
              apply(a, value);
              next.push_back(a);
            }
          variants = std::move(next);
        };
        switch (base.kind) {
          case AcceleratorKind::Unrelaxed:
            break;
          case AcceleratorKind::Classical:
            fan([](AcceleratorConfig& a, double r) { a.rho = r; }, cfg.sweep_rho);
            break;
          case AcceleratorKind::Aitken:
            fan([](AcceleratorConfig& a, double r) { a.rho_init = r; },
                cfg.sweep_rho);
            fan([](AcceleratorConfig& a, int n) { a.n0 = n; }, cfg.sweep_n0);
            break;
          case AcceleratorKind::Anderson:
            fan([](AcceleratorConfig& a, double r) { a.rho = r; }, cfg.sweep_rho);
            fan([](AcceleratorConfig& a, int m) { a.m_and = m; },
                cfg.sweep_m_and);
            break;
        }
        for (const auto& a : variants) specs.push_back({xb, nd, label, a});
      }
  return specs;
}

std::string run_id(std::size_t index, const RunSpec& spec) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", index);
  return std::string(buf) + "_" + spec.label;
}

void write_trace(const std::filesystem::path& path,
                 const ConvergenceReport& rep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "k,e_abs,e_rel,rho,m_k,alpha\n";
  for (const auto& r : rep.records) {
    out << r.k << ',' << fmt(r.e_abs) << ',' << fmt(r.e_rel) << ',';
    if (r.has_rho) out << join(r.rho_slices);
    out << ',';
    if (r.has_memory) out << r.m_k;
    out << ',';
    if (r.has_memory) out << join(r.alpha);
    out << '\n';
  }
}

const char* kParamHeader =
    "run,backend,accelerator,kind,x_bar,n_dd,mesh,rho,rho_init,n0,m_and,"
    "memory_adaptation,m_bar,eps_and";

void write_params(std::ostream& out, const ExperimentConfig& cfg,
                  const RunResult& r) {
  out << r.id << ',' << to_string(r.backend) << ',' << r.accel_label << ','
      << to_string(r.accel.kind) << ',' << fmt(r.x_bar) << ',' << r.n_dd << ','
      << (cfg.backend == Backend::Elasticity2D ? cfg.mesh : cfg.n_points) << ','
      << fmt(r.accel.rho) << ',' << fmt(r.accel.rho_init) << ',' << r.accel.n0
      << ',' << r.accel.m_and << ',' << (r.accel.memory_adaptation ? 1 : 0)
      << ',' << r.accel.m_bar << ',' << fmt(r.accel.eps_and);
}

json environment_stamp() {
  json env;
  env["compiler"] = __VERSION__;
  env["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." +
                 std::to_string(EIGEN_MAJOR_VERSION) + "." +
                 std::to_string(EIGEN_MINOR_VERSION);
  env["pointer_bits"] = 8 * sizeof(void*);
  return env;
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["backend"] = to_string(cfg.backend);
  j["x_bar"] = cfg.x_bar;
  j["n_points"] = cfg.n_points;
  j["g_init"] = cfg.g_init;
  j["n_dd"] = cfg.n_dd;
  j["mesh"] = cfg.mesh;
  j["pull"] = cfg.pull;
  json accels = json::array();
  for (const auto& [label, a] : cfg.accelerators) {
    json e = accel_to_json(a);
    e["label"] = label;
    accels.push_back(e);
  }
  j["accelerators"] = accels;
  j["sweep"] = {{"rho", cfg.sweep_rho},
                {"x_bar", cfg.sweep_x_bar},
                {"m_and", cfg.sweep_m_and},
                {"n0", cfg.sweep_n0},
                {"n_dd", cfg.sweep_n_dd}};
  j["criteria"] = {{"eps_abs", cfg.criteria.eps_abs},
                   {"eps_rel", cfg.criteria.eps_rel},
                   {"maxit", cfg.criteria.maxit}};
  j["output_dir"] = cfg.output_dir.string();
  j["dump_fields"] = cfg.dump_fields;
  return j;
}

RunResult execute(const ExperimentConfig& cfg, std::size_t index,
                  const RunSpec& spec) {
  RunResult result;
  result.id = run_id(index, spec);
  result.backend = cfg.backend;
  result.x_bar = spec.x_bar;
  result.n_dd = spec.n_dd;
  result.accel_label = spec.label;
  result.accel = spec.accel;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto accel = make_accelerator(spec.accel);
    if (cfg.backend == Backend::Laplace1D) {
      Laplace1DProblem problem({spec.x_bar, cfg.n_points, cfg.g_init});
      result.report = run_schwarz(problem, *accel, cfg.criteria,
                                  problem.initial_state());
    } else {
      ChainConfig chain;
      chain.n_dd = spec.n_dd;
      chain.elements_per_edge = cfg.mesh;
      chain.pull = cfg.pull;
      ElasticChainProblem problem(chain);
      result.report =
          run_schwarz(problem, *accel, cfg.criteria, problem.zero_state());
      if (result.report.converged && cfg.compute_e_max)
        result.e_max =
            problem.e_max_per_subdomain(problem.monolithic_solution());
      if (cfg.dump_fields && result.report.converged)
        for (int i = 0; i < spec.n_dd; ++i)
          fe::write_field_csv(
              problem.plan().subdomains[std::size_t(i)].mesh,
              problem.last_solutions()[std::size_t(i)],
              (cfg.output_dir /
               ("fields_" + result.id + "_sub" + std::to_string(i) + ".csv"))
                  .string());
    }
  } catch (const std::exception& err) {
    result.report.converged = false;
    result.report.failure = err.what();
  }
  result.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

void write_batch_outputs(const ExperimentConfig& cfg,
                         const ExperimentOutput& out) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);

  std::ofstream iters(cfg.output_dir / "iterations.csv");
  iters << kParamHeader << ",converged,iterations,failure\n";
  std::ofstream errors(cfg.output_dir / "errors.csv");
  errors << kParamHeader << ",final_e_abs,final_e_rel,e_max\n";
  std::ofstream times(cfg.output_dir / "timings.csv");
  times << "run,total_seconds,mean_iteration_seconds\n";

  for (const auto& r : out.runs) {
    write_params(iters, cfg, r);
    iters << ',' << (r.report.converged ? 1 : 0) << ',' << r.report.iterations
          << ',' << r.report.failure << '\n';

    write_params(errors, cfg, r);
    errors << ',';
    if (!r.report.records.empty())
      errors << fmt(r.report.records.back().e_abs) << ','
             << fmt(r.report.records.back().e_rel);
    else
      errors << ',';
    errors << ',';
    if (!r.e_max.empty())
      errors << fmt(*std::max_element(r.e_max.begin(), r.e_max.end()));
    errors << '\n';

    times << r.id << ',' << fmt(r.total_seconds) << ','
          << fmt(r.report.iterations > 0
                     ? r.total_seconds / r.report.iterations
                     : 0.0)
          << '\n';

    write_trace(cfg.output_dir / ("trace_" + r.id + ".csv"), r.report);
  }

  json summary;
  summary["config"] = config_to_json(cfg);
  summary["environment"] = environment_stamp();
  summary["runs"] = out.runs.size();
  std::ofstream(cfg.output_dir / "summary.json") << summary.dump(2) << '\n';
}

}  // namespace

std::string to_string(Backend b) {
  return b == Backend::Laplace1D ? "laplace1d" : "elasticity2d";
}

std::string to_string(AcceleratorKind k) {
  switch (k) {
    case AcceleratorKind::Unrelaxed: return "unrelaxed";
    case AcceleratorKind::Classical: return "classical";
    case AcceleratorKind::Aitken: return "aitken";
    case AcceleratorKind::Anderson: return "anderson";
  }
  return "?";
}

std::vector<std::string> ExperimentConfig::list_violations() const {
  std::vector<std::string> bad;
  if (accelerators.empty()) bad.push_back("no accelerators configured");
  for (const auto& [label, a] : accelerators) {
    try {
      a.validate();
    } catch (const std::exception& e) {
      bad.push_back(label + ": " + e.what());
    }
  }
  try {
    criteria.validate();
  } catch (const std::exception& e) {
    bad.push_back(e.what());
  }
  auto check_range = [&](double v, const char* what) {
    if (!(v > 0.0 && v < 1.0))
      bad.push_back(std::string(what) + " outside (0,1): " + std::to_string(v));
  };
  if (backend == Backend::Laplace1D) {
    check_range(x_bar, "x_bar");
    for (double v : sweep_x_bar) check_range(v, "swept x_bar");
    if (n_points < 3) bad.push_back("n_points must be at least 3");
  } else {
    if (mesh < 2) bad.push_back("mesh must be at least 2 elements per edge");
    if (n_dd < 2) bad.push_back("n_dd must be at least 2");
    for (int v : sweep_n_dd)
      if (v < 2) bad.push_back("swept n_dd must be at least 2");
  }
  for (double v : sweep_rho)
    if (!(v > 0.0 && v <= 1.0))
      bad.push_back("swept rho outside (0,1]: " + std::to_string(v));
  for (int v : sweep_n0)
    if (v < 2) bad.push_back("swept n0 must be at least 2");
  for (int v : sweep_m_and)
    if (v < 1) bad.push_back("swept m_and must be positive");
  return bad;
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig cfg;
  const std::string backend = j.at("backend").get<std::string>();
  if (backend == "laplace1d")
    cfg.backend = Backend::Laplace1D;
  else if (backend == "elasticity2d")
    cfg.backend = Backend::Elasticity2D;
  else
    throw std::invalid_argument("unknown backend: " + backend);

  cfg.x_bar = j.value("x_bar", cfg.x_bar);
  cfg.n_points = j.value("n_points", cfg.n_points);
  cfg.g_init = j.value("g_init", cfg.g_init);
  cfg.n_dd = j.value("n_dd", cfg.n_dd);
  cfg.mesh = j.value("mesh", cfg.mesh);
  cfg.pull = j.value("pull", cfg.pull);

  if (j.contains("accelerator")) {
    auto a = accel_from_json(j["accelerator"]);
    cfg.accelerators.emplace_back(
        j["accelerator"].value("label", default_label(a)), a);
  }
  if (j.contains("accelerators"))
    for (const auto& e : j["accelerators"]) {
      auto a = accel_from_json(e);
      cfg.accelerators.emplace_back(e.value("label", default_label(a)), a);
    }

  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    auto read_sweep = [&](const char* key, auto& target) {
      if (!s.contains(key)) return;
      if (s[key].empty())
        throw std::invalid_argument(std::string("empty sweep list for '") +
                                    key + "'");
      target = s[key].get<std::decay_t<decltype(target)>>();
    };
    read_sweep("rho", cfg.sweep_rho);
    read_sweep("x_bar", cfg.sweep_x_bar);
    read_sweep("m_and", cfg.sweep_m_and);
    read_sweep("n0", cfg.sweep_n0);
    read_sweep("n_dd", cfg.sweep_n_dd);
  }
  if (j.contains("criteria")) {
    const auto& c = j["criteria"];
    cfg.criteria.eps_abs = c.value("eps_abs", cfg.criteria.eps_abs);
    cfg.criteria.eps_rel = c.value("eps_rel", cfg.criteria.eps_rel);
    cfg.criteria.maxit = c.value("maxit", cfg.criteria.maxit);
  }
  cfg.output_dir = j.value("output_dir", cfg.output_dir.string());
  cfg.dump_fields = j.value("dump_fields", cfg.dump_fields);
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  const auto violations = cfg.list_violations();
  if (!violations.empty()) {
    std::string msg = "invalid experiment config:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw std::invalid_argument(msg);
  }

  std::filesystem::create_directories(cfg.output_dir);
  const auto specs = expand(cfg);

  ExperimentOutput out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    out.runs.push_back(execute(cfg, i, specs[i]));
    if (!out.runs.back().report.failure.empty()) out.all_succeeded = false;
  }
  write_batch_outputs(cfg, out);
  return out;
}

ExperimentOutput compare_methods(const ExperimentConfig& cfg) {
  const auto violations = cfg.list_violations();
  if (!violations.empty()) {
    std::string msg = "invalid experiment config:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw std::invalid_argument(msg);
  }

  std::filesystem::create_directories(cfg.output_dir);

  ExperimentOutput out;
  for (std::size_t i = 0; i < cfg.accelerators.size(); ++i) {
    RunSpec spec{cfg.x_bar, cfg.n_dd, cfg.accelerators[i].first,
                 cfg.accelerators[i].second};
    out.runs.push_back(execute(cfg, i, spec));
    if (!out.runs.back().report.failure.empty()) out.all_succeeded = false;
  }

  const int n_sub = cfg.backend == Backend::Elasticity2D ? cfg.n_dd : 0;
  std::ofstream comp(cfg.output_dir / "comparison.csv");
  comp << kParamHeader << ",converged,iterations,final_e_abs,final_e_rel";
  for (int i = 1; i <= n_sub; ++i) comp << ",e_max_" << i;
  comp << ",failure\n";
  std::ofstream times(cfg.output_dir / "comparison_timings.csv");
  times << "run,total_seconds,mean_iteration_seconds\n";

  for (const auto& r : out.runs) {
    write_params(comp, cfg, r);
    comp << ',' << (r.report.converged ? 1 : 0) << ',' << r.report.iterations
         << ',';
    if (!r.report.records.empty())
      comp << fmt(r.report.records.back().e_abs) << ','
           << fmt(r.report.records.back().e_rel);
    else
      comp << ',';
    for (int i = 0; i < n_sub; ++i) {
      comp << ',';
      if (i < static_cast<int>(r.e_max.size())) comp << fmt(r.e_max[std::size_t(i)]);
    }
    comp << ',' << r.report.failure << '\n';

    times << r.id << ',' << fmt(r.total_seconds) << ','
          << fmt(r.report.iterations > 0
                     ? r.total_seconds / r.report.iterations
                     : 0.0)
          << '\n';
    write_trace(cfg.output_dir / ("trace_" + r.id + ".csv"), r.report);
  }

  json summary;
  summary["config"] = config_to_json(cfg);
  summary["environment"] = environment_stamp();
  summary["runs"] = out.runs.size();
  std::ofstream(cfg.output_dir / "summary.json") << summary.dump(2) << '\n';
  return out;
}

ConvergenceOrder measure_convergence_order(const std::vector<double>& errors,
                                           double cap, double floor) {
  // Usable window: strictly inside (floor, cap), final iteration dropped.
  std::vector<double> e;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i)
    if (errors[i] < cap && errors[i] > floor) e.push_back(errors[i]);
  if (e.size() < 4)
    throw std::invalid_argument(
        "need at least four usable iterations to estimate an order");

  ConvergenceOrder result;
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    result.c_k.push_back(e[i + 1] / (e[i] * e[i]));

  // Least-squares slope of log e_{k+1} against log e_k.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(e.size() - 1);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    const double x = std::log(e[i]);
    const double y = std::log(e[i + 1]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  result.factor = std::exp((sy - result.order * sx) / n);
  return result;
}

ConvergenceOrder measure_convergence_order_csv(
    const std::filesystem::path& trace_csv) {
  std::ifstream in(trace_csv);
  if (!in) throw std::runtime_error("cannot open " + trace_csv.string());
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> e_rel;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string field;
    std::getline(ss, field, ',');  // k
    std::getline(ss, field, ',');  // e_abs
    std::getline(ss, field, ',');  // e_rel
    e_rel.push_back(std::stod(field));
  }
  return measure_convergence_order(e_rel);
}

std::vector<std::string> builtin_config_names() {
  return {"table1", "table2", "table3", "table4", "ndd-study"};
}

ExperimentConfig builtin_config(const std::string& name, int mesh) {
  ExperimentConfig cfg;
  if (name == "table1" || name == "table2") {
    // 1D interface-location / relaxation grid plus the two accelerated
    // columns; iterations.csv and errors.csv carry the two tables.
    cfg.backend = Backend::Laplace1D;
    cfg.sweep_x_bar = {0.1, 0.2, 0.5, 0.7, 0.8};
    cfg.criteria = {1e-8, 1e-8, 50};
    for (double rho : {0.1, 0.2, 0.5, 0.7, 0.8, 1.0}) {
      AcceleratorConfig c;
      c.kind = AcceleratorKind::Classical;
      c.rho = rho;
      char label[32];
      std::snprintf(label, sizeof label, "classical_rho%.1f", rho);
      cfg.accelerators.emplace_back(label, c);
    }
    AcceleratorConfig aitken;
    aitken.kind = AcceleratorKind::Aitken;
    aitken.rho_init = 1.0;
    aitken.n0 = 2;
    cfg.accelerators.emplace_back("aitken", aitken);
    AcceleratorConfig anderson;
    anderson.kind = AcceleratorKind::Anderson;
    anderson.rho = 1.0;
    anderson.m_and = 1;
    cfg.accelerators.emplace_back("anderson", anderson);
    cfg.output_dir = name == "table1" ? "out_table1" : "out_table2";
    return cfg;
  }
  if (name == "table3" || name == "table4") {
    const double rho = name == "table3" ? 0.2 : 0.5;
    cfg.backend = Backend::Elasticity2D;
    cfg.n_dd = 2;
    cfg.mesh = mesh > 0 ? mesh : 20;
    cfg.criteria = {1e-6, 1e-6, 100};
    AcceleratorConfig classical;
    classical.kind = AcceleratorKind::Classical;
    classical.rho = rho;
    cfg.accelerators.emplace_back("classical", classical);
    AcceleratorConfig aitken;
    aitken.kind = AcceleratorKind::Aitken;
    aitken.rho_init = rho;
    aitken.n0 = 2;
    cfg.accelerators.emplace_back("aitken", aitken);
    for (int m : {1, 2, 3}) {
      AcceleratorConfig anderson;
      anderson.kind = AcceleratorKind::Anderson;
      anderson.rho = rho;
      anderson.m_and = m;
      cfg.accelerators.emplace_back("anderson_m" + std::to_string(m), anderson);
    }
    cfg.output_dir = name == "table3" ? "out_table3" : "out_table4";
    return cfg;
  }
  if (name == "ndd-study") {
    cfg.backend = Backend::Elasticity2D;
    cfg.mesh = mesh > 0 ? mesh : 20;
    cfg.sweep_n_dd = {2, 3, 4, 5};
    // Generous budget so the slow methods report true counts at desk scale.
    cfg.criteria = {1e-6, 1e-6, 200};
    AcceleratorConfig classical;
    classical.kind = AcceleratorKind::Classical;
    classical.rho = 0.5;
    cfg.accelerators.emplace_back("classical", classical);
    AcceleratorConfig aitken;
    aitken.kind = AcceleratorKind::Aitken;
    aitken.rho_init = 0.5;
    aitken.n0 = 5;
    cfg.accelerators.emplace_back("diagonal_aitken", aitken);
    AcceleratorConfig anderson;
    anderson.kind = AcceleratorKind::Anderson;
    anderson.rho = 0.5;
    anderson.m_and = 20;
    anderson.memory_adaptation = true;
    anderson.m_bar = 3;
    anderson.eps_and = 1e-5;
    cfg.accelerators.emplace_back("anderson_adaptive", anderson);
    cfg.output_dir = "out_ndd_study";
    return cfg;
  }
  throw std::invalid_argument("unknown built-in study: " + name);
}

ExperimentOutput run_builtin(const std::string& name, int mesh,
                             const std::filesystem::path& output_dir) {
  ExperimentConfig cfg = builtin_config(name, mesh);
  if (!output_dir.empty()) cfg.output_dir = output_dir;
  if (name == "table3" || name == "table4") return compare_methods(cfg);
  return run_experiment(cfg);
}

}  // namespace schwarz
