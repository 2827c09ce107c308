#include "schwarz/elasticity/monolithic.hpp"

#include <algorithm>
#include <cmath>

namespace schwarz::fe {

Vector solve_monolithic(const TriMesh& mesh, const MaterialParams& mat,
                        double pull, const NewtonOptions& opts) {
  BoundaryData bc;
  bc.external_force = Vector::Zero(mesh.n_dofs());
  for (int n : mesh.nodes_on(BoundaryTag::Sigma3)) bc.prescribe(2 * n + 1, 0.0);
  for (int n : mesh.nodes_on(BoundaryTag::Sigma1)) bc.prescribe(2 * n, 0.0);
  for (int n : mesh.nodes_on(BoundaryTag::Sigma2)) bc.prescribe(2 * n, pull);

  const Vector guess = linear_elastic_solve(mesh, mat, bc);
  return newton_solve(mesh, mat, bc, guess, opts).u;
}

double e_max(const Vector& u_a, const Vector& u_b) {
  if (u_a.size() != u_b.size() || u_a.size() % 2 != 0)
    throw std::invalid_argument("field layouts differ");
  double m = 0.0;
  for (Eigen::Index n = 0; n < u_a.size() / 2; ++n) {
    const double dx = u_a[2 * n] - u_b[2 * n];
    const double dy = u_a[2 * n + 1] - u_b[2 * n + 1];
    m = std::max(m, std::sqrt(dx * dx + dy * dy));
  }
  return m;
}

}  // namespace schwarz::fe
