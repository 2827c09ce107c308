#pragma once

#include "schwarz/types.hpp"

#include <span>

namespace schwarz {

struct InterfaceErrors {
  double e_abs = 0.0;
  double e_rel = 0.0;
  /// Set when a current trace has zero norm while its difference does not;
  /// e_rel is then +infinity and the stopping test falls back to e_abs.
  bool rel_degenerate = false;
};

/// Combined interface errors over a set of trace vectors,
///   e_abs = sqrt( sum_i ||curr_i - prev_i||^2 )
///   e_rel = sqrt( sum_i ||curr_i - prev_i||^2 / ||curr_i||^2 ).
/// Zero-length traces are skipped. prev and curr must have matching shapes.
InterfaceErrors interface_errors(std::span<const Vector> prev_traces,
                                 std::span<const Vector> curr_traces);

/// Same, over the per-interface slices of two interface states sharing one
/// layout. The loop calls this with (g_k, g_{k+1}).
InterfaceErrors interface_errors(const InterfaceState& prev,
                                 const InterfaceState& curr);

/// The loop continues while e_abs > eps_abs AND e_rel > eps_rel AND k < maxit.
bool below_tolerance(const InterfaceErrors& e, const ConvergenceCriteria& c);

}  // namespace schwarz
