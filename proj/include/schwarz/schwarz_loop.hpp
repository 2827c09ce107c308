#pragma once

#include "schwarz/accel.hpp"
#include "schwarz/convergence.hpp"
#include "schwarz/coupled_problem.hpp"

namespace schwarz {

/// Fixed-point driver: iterates g^(k+1) = accel(g^(k), T(g^(k))) until
/// e_abs <= eps_abs or e_rel <= eps_rel or k = maxit, recording one
/// IterationRecord per completed iteration. Errors compare the updated
/// interface vector against the one just used, slice by slice; the first
/// iteration therefore compares against g_init.
///
/// A backend or accelerator failure aborts the run: the report keeps the
/// records produced so far, converged = false, and `failure` carries the
/// cause.
ConvergenceReport run_schwarz(CoupledProblem& problem,
                              InterfaceAccelerator& accel,
                              const ConvergenceCriteria& criteria,
                              const InterfaceState& g_init);

}  // namespace schwarz
