#include "schwarz/schwarz_loop.hpp"

#include <chrono>

namespace schwarz {

ConvergenceReport run_schwarz(CoupledProblem& problem,
                              InterfaceAccelerator& accel,
                              const ConvergenceCriteria& criteria,
                              const InterfaceState& g_init) {
  criteria.validate();
  g_init.validate();
  if (g_init.layout != problem.interface_layout())
    throw std::invalid_argument(
        "initial interface state does not match the problem layout");

  accel.reset(g_init.layout);

  ConvergenceReport report;
  report.final_state = g_init;

  InterfaceState g = g_init;

  for (int k = 1; k <= criteria.maxit; ++k) {
    const auto t0 = std::chrono::steady_clock::now();

    Vector Tg;
    AccelUpdate up;
    try {
      Tg = problem.evaluate(g.values);

      StepContext ctx;
      if (report.records.size() >= 1)
        ctx.e_rel_prev = report.records.back().e_rel;
      if (report.records.size() >= 2)
        ctx.e_rel_prev2 = report.records[report.records.size() - 2].e_rel;

      up = accel.update(k, g.values, Tg, ctx);
    } catch (const CoupledSolveError& err) {
      report.failure = err.what();
      report.converged = false;
      report.iterations = k - 1;
      return report;
    }

    InterfaceState g_next{up.g_next, g.layout};
    const InterfaceErrors errs = interface_errors(g, g_next);

    IterationRecord rec;
    rec.k = k;
    rec.e_abs = errs.e_abs;
    rec.e_rel = errs.e_rel;
    rec.e_rel_degenerate = errs.rel_degenerate;
    rec.has_rho = up.has_rho;
    rec.rho_used = up.rho;
    rec.rho_slices = up.rho_slices;
    rec.has_memory = up.has_memory;
    rec.m_k = up.m_k;
    rec.alpha.assign(up.alpha.data(), up.alpha.data() + up.alpha.size());
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    report.records.push_back(std::move(rec));

    g = std::move(g_next);
    report.iterations = k;
    report.final_state = g;

    if (below_tolerance(errs, criteria)) {
      report.converged = true;
      return report;
    }
  }

  report.converged = false;
  return report;
}

}  // namespace schwarz
