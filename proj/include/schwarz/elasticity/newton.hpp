#pragma once

#include "schwarz/elasticity/assembly.hpp"

namespace schwarz::fe {

struct NewtonOptions {
  double tol = 1e-8;  // absolute tolerance on the free-dof residual norm
  int maxit = 30;
  int max_halvings = 20;
};

class NewtonError : public std::runtime_error {
 public:
  NewtonError(std::string what, std::vector<double> residual_history)
      : std::runtime_error(std::move(what)),
        residual_history(std::move(residual_history)) {}
  std::vector<double> residual_history;
};

struct NewtonResult {
  Vector u;
  int iterations = 0;
  std::vector<double> residual_history;
};

/// Newton with a backtracking line search that halves the step whenever the
/// residual norm fails to decrease or an element inverts. Constrained dofs
/// are set exactly up front and eliminated symmetrically from the solves.
NewtonResult newton_solve(const TriMesh& mesh, const MaterialParams& mat,
                          const BoundaryData& bc, const Vector& u_guess,
                          const NewtonOptions& opts);

/// Small-strain (tangent at u = 0) solve with the same boundary data; the
/// warm-start producer for the nonlinear solves.
Vector linear_elastic_solve(const TriMesh& mesh, const MaterialParams& mat,
                            const BoundaryData& bc);

}  // namespace schwarz::fe
