#pragma once

#include "schwarz/types.hpp"

namespace schwarz {

/// Behavioral contract for a coupled-problem backend. The fixed-point loop
/// only ever sees interface data: it hands the backend the current interface
/// vector g and receives T(g), the trace produced by one full
/// Dirichlet-then-Neumann sweep. Sub-domain solutions stay inside the backend
/// and are recoverable after the loop finishes.
class CoupledProblem {
 public:
  virtual ~CoupledProblem() = default;

  virtual const InterfaceLayout& interface_layout() const = 0;

  /// One multiplicative sweep; throws CoupledSolveError on a subdomain
  /// failure.
  virtual Vector evaluate(const Vector& g) = 0;
};

}  // namespace schwarz
