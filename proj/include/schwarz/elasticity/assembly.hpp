#pragma once

#include "schwarz/elasticity/material.hpp"
#include "schwarz/elasticity/mesh.hpp"

#include <Eigen/Sparse>

namespace schwarz::fe {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Prescribed nodal values plus external nodal forces. Dirichlet entries are
/// keyed by dof (2*node for x, 2*node+1 for y); the first writer of a dof
/// wins, which gives external constraints precedence over interface data.
struct BoundaryData {
  std::map<int, double> dirichlet;
  Vector external_force;  // full length, may be empty meaning zero

  void prescribe(int dof, double value) { dirichlet.emplace(dof, value); }
};

/// Internal nodal forces of the P1 discretization of -div P(F(u)), one-point
/// quadrature. Throws InvertedElementError when an element inverts.
Vector assemble_internal_forces(const TriMesh& mesh, const MaterialParams& mat,
                                const Vector& u);

/// Consistent tangent of assemble_internal_forces.
SparseMatrix assemble_tangent(const TriMesh& mesh, const MaterialParams& mat,
                              const Vector& u);

/// Full residual with boundary data applied: internal forces minus external
/// forces, rows at constrained dofs replaced by u[dof] - value.
Vector assemble_residual(const TriMesh& mesh, const MaterialParams& mat,
                         const Vector& u, const BoundaryData& bc);

}  // namespace schwarz::fe
