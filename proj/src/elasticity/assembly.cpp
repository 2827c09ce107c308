#include "schwarz/elasticity/assembly.hpp"

namespace schwarz::fe {

namespace {

struct ElementGeometry {
  double area;
  Eigen::Vector2d grad[3];  // reference gradients of the three hat functions
};

ElementGeometry element_geometry(const TriMesh& mesh,
                                 const std::array<int, 3>& tri) {
  const Eigen::Vector2d& p0 = mesh.nodes[std::size_t(tri[0])];
  Eigen::Matrix2d D;
  D.col(0) = mesh.nodes[std::size_t(tri[1])] - p0;
  D.col(1) = mesh.nodes[std::size_t(tri[2])] - p0;
  const double det = D.determinant();

  ElementGeometry g;
  g.area = 0.5 * det;
  const Eigen::Matrix2d Dinv = D.inverse();
  // grad N_a = Dinv^T * gradRef N_a
  g.grad[1] = Dinv.row(0).transpose();
  g.grad[2] = Dinv.row(1).transpose();
  g.grad[0] = -g.grad[1] - g.grad[2];
  return g;
}

Eigen::Matrix2d deformation_gradient(const Vector& u,
                                     const std::array<int, 3>& tri,
                                     const ElementGeometry& g) {
  Eigen::Matrix2d F = Eigen::Matrix2d::Identity();
  for (int a = 0; a < 3; ++a) {
    const Eigen::Vector2d ua(u[2 * tri[std::size_t(a)]],
                             u[2 * tri[std::size_t(a)] + 1]);
    F += ua * g.grad[a].transpose();
  }
  return F;
}

}  // namespace

Vector assemble_internal_forces(const TriMesh& mesh, const MaterialParams& mat,
                                const Vector& u) {
  if (u.size() != mesh.n_dofs())
    throw std::invalid_argument("displacement length does not match the mesh");

  Vector r = Vector::Zero(mesh.n_dofs());
  for (std::size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto& tri = mesh.triangles[e];
    const ElementGeometry g = element_geometry(mesh, tri);
    const Eigen::Matrix2d F = deformation_gradient(u, tri, g);
    Eigen::Matrix2d P;
    try {
      P = piola_stress(F, mat);
    } catch (const InvertedElementError& err) {
      throw InvertedElementError(err.det, static_cast<int>(e));
    }
    for (int a = 0; a < 3; ++a) {
      const Eigen::Vector2d fa = g.area * P * g.grad[a];
      r[2 * tri[std::size_t(a)]] += fa[0];
      r[2 * tri[std::size_t(a)] + 1] += fa[1];
    }
  }
  return r;
}

SparseMatrix assemble_tangent(const TriMesh& mesh, const MaterialParams& mat,
                              const Vector& u) {
  if (u.size() != mesh.n_dofs())
    throw std::invalid_argument("displacement length does not match the mesh");

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(mesh.triangles.size() * 36);

  for (std::size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto& tri = mesh.triangles[e];
    const ElementGeometry g = element_geometry(mesh, tri);
    const Eigen::Matrix2d F = deformation_gradient(u, tri, g);
    MaterialTangent A;
    try {
      A = piola_tangent(F, mat);
    } catch (const InvertedElementError& err) {
      throw InvertedElementError(err.det, static_cast<int>(e));
    }

    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        // k[i][k2] = area * A[i][J][k2][L] grad_a[J] grad_b[L]
        double k[2][2] = {{0, 0}, {0, 0}};
        for (int i = 0; i < 2; ++i)
          for (int k2 = 0; k2 < 2; ++k2) {
            double s = 0.0;
            for (int J = 0; J < 2; ++J)
              for (int L = 0; L < 2; ++L)
                s += A.a[i][J][k2][L] * g.grad[a][J] * g.grad[b][L];
            k[i][k2] = g.area * s;
          }
        for (int i = 0; i < 2; ++i)
          for (int k2 = 0; k2 < 2; ++k2)
            trip.emplace_back(2 * tri[std::size_t(a)] + i,
                              2 * tri[std::size_t(b)] + k2, k[i][k2]);
      }
  }

  SparseMatrix K(mesh.n_dofs(), mesh.n_dofs());
  K.setFromTriplets(trip.begin(), trip.end());
  return K;
}

Vector assemble_residual(const TriMesh& mesh, const MaterialParams& mat,
                         const Vector& u, const BoundaryData& bc) {
  Vector r = assemble_internal_forces(mesh, mat, u);
  if (bc.external_force.size() > 0) {
    if (bc.external_force.size() != r.size())
      throw std::invalid_argument("external force length mismatch");
    r -= bc.external_force;
  }
  for (const auto& [dof, value] : bc.dirichlet) r[dof] = u[dof] - value;
  return r;
}

}  // namespace schwarz::fe
