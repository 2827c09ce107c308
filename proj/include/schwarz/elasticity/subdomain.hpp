#pragma once

#include "schwarz/elasticity/newton.hpp"

#include <optional>

namespace schwarz::fe {

enum class FaceRole {
  ExternalDirichlet,   // u.n prescribed (x component on vertical faces)
  ExternalNeumannZero, // traction free
  InterfaceDirichlet,  // full displacement trace handed over
  InterfaceNeumann     // nodal traction handed over
};

/// One strip of the bar. The bottom always carries u_y = 0 and the top is
/// traction free; the left/right faces play the roles assigned by the chain.
struct SubdomainProblem {
  TriMesh mesh;
  MaterialParams material;
  FaceRole role_left = FaceRole::ExternalDirichlet;
  FaceRole role_right = FaceRole::InterfaceDirichlet;
  double external_value_left = 0.0;   // u_x on an external Dirichlet face
  double external_value_right = 0.0;
  NewtonOptions newton;
  bool warm_start = true;
  int id = 0;

  void validate() const;
};

/// Interface data for one solve; entries are present according to the roles.
struct InterfaceData {
  std::optional<Vector> dirichlet_left, dirichlet_right;
  std::optional<Vector> traction_left, traction_right;
};

/// Nodal displacement values on a tagged face, ordered by y, interleaved
/// (ux, uy) per node.
Vector extract_trace(const TriMesh& mesh, const Vector& u, BoundaryTag tag);

/// Variationally consistent interface traction to hand to the neighbouring
/// Neumann face: the negated rows of the unconstrained internal-force vector
/// on the tagged face, same ordering as extract_trace.
Vector extract_traction(const TriMesh& mesh, const MaterialParams& mat,
                        const Vector& u, BoundaryTag tag);

/// Assembles the Dirichlet set and external forces for the given roles and
/// interface data. External constraints take precedence at shared corners.
BoundaryData make_boundary_data(const SubdomainProblem& sub,
                                const InterfaceData& data);

/// Warm-started nonlinear solve. When warm_start is set the initial guess is
/// the small-strain solution with the same boundary data, rebuilt on every
/// call; otherwise u_prev (or zero) seeds the Newton iteration directly.
Vector solve_subdomain(const SubdomainProblem& sub, const InterfaceData& data,
                       const Vector* u_prev = nullptr);

}  // namespace schwarz::fe
