#include "schwarz/elasticity/newton.hpp"

#include <Eigen/SparseCholesky>

#include <cmath>

namespace schwarz::fe {

namespace {

// Index map between full dofs and the unconstrained subset.
struct FreeDofMap {
  std::vector<int> full_to_free;  // -1 for constrained dofs
  std::vector<int> free_to_full;

  explicit FreeDofMap(int n_dofs, const std::map<int, double>& dirichlet) {
    full_to_free.assign(std::size_t(n_dofs), -1);
    free_to_full.reserve(std::size_t(n_dofs) - dirichlet.size());
    for (int d = 0; d < n_dofs; ++d) {
      if (dirichlet.count(d)) continue;
      full_to_free[std::size_t(d)] = static_cast<int>(free_to_full.size());
      free_to_full.push_back(d);
    }
  }

  Vector restrict_vec(const Vector& full) const {
    Vector out(static_cast<Eigen::Index>(free_to_full.size()));
    for (std::size_t i = 0; i < free_to_full.size(); ++i)
      out[static_cast<Eigen::Index>(i)] = full[free_to_full[i]];
    return out;
  }

  SparseMatrix restrict_mat(const SparseMatrix& K) const {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(std::size_t(K.nonZeros()));
    for (int col = 0; col < K.outerSize(); ++col) {
      const int fc = full_to_free[std::size_t(col)];
      if (fc < 0) continue;
      for (SparseMatrix::InnerIterator it(K, col); it; ++it) {
        const int fr = full_to_free[std::size_t(it.row())];
        if (fr >= 0) trip.emplace_back(fr, fc, it.value());
      }
    }
    SparseMatrix out(static_cast<int>(free_to_full.size()),
                     static_cast<int>(free_to_full.size()));
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
  }
};

Vector apply_constraints(const Vector& u, const BoundaryData& bc) {
  Vector out = u;
  for (const auto& [dof, value] : bc.dirichlet) out[dof] = value;
  return out;
}

double free_residual_norm(const Vector& r, const FreeDofMap& map) {
  double s = 0.0;
  for (int d : map.free_to_full) s += r[d] * r[d];
  return std::sqrt(s);
}

}  // namespace

NewtonResult newton_solve(const TriMesh& mesh, const MaterialParams& mat,
                          const BoundaryData& bc, const Vector& u_guess,
                          const NewtonOptions& opts) {
  const FreeDofMap map(mesh.n_dofs(), bc.dirichlet);
  Vector u = apply_constraints(u_guess, bc);

  std::vector<double> history;
  Vector r;
  try {
    r = assemble_residual(mesh, mat, u, bc);
  } catch (const InvertedElementError&) {
    throw NewtonError("initial guess has inverted elements", history);
  }
  double rnorm = free_residual_norm(r, map);
  history.push_back(rnorm);

  Eigen::SimplicialLDLT<SparseMatrix> solver;

  for (int it = 0; it < opts.maxit; ++it) {
    if (rnorm <= opts.tol) return {u, it, history};

    const SparseMatrix K = map.restrict_mat(assemble_tangent(mesh, mat, u));
    solver.compute(K);
    if (solver.info() != Eigen::Success)
      throw NewtonError("tangent factorization failed", history);
    const Vector delta_free = solver.solve(-map.restrict_vec(r));

    Vector delta = Vector::Zero(mesh.n_dofs());
    for (std::size_t i = 0; i < map.free_to_full.size(); ++i)
      delta[map.free_to_full[i]] = delta_free[static_cast<Eigen::Index>(i)];

    // Backtracking: halve on residual increase or element inversion.
    double step = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      const Vector u_try = u + step * delta;
      try {
        const Vector r_try = assemble_residual(mesh, mat, u_try, bc);
        const double rn_try = free_residual_norm(r_try, map);
        if (rn_try < rnorm) {
          u = u_try;
          r = r_try;
          rnorm = rn_try;
          accepted = true;
          break;
        }
      } catch (const InvertedElementError&) {
        // fall through to a shorter step
      }
      step *= 0.5;
    }
    if (!accepted) throw NewtonError("line search failed", history);
    history.push_back(rnorm);
  }

  if (rnorm <= opts.tol) return {u, opts.maxit, history};
  throw NewtonError("newton did not converge within maxit", history);
}

Vector linear_elastic_solve(const TriMesh& mesh, const MaterialParams& mat,
                            const BoundaryData& bc) {
  const FreeDofMap map(mesh.n_dofs(), bc.dirichlet);
  const Vector u_bc = apply_constraints(Vector::Zero(mesh.n_dofs()), bc);

  const SparseMatrix K = assemble_tangent(mesh, mat, Vector::Zero(mesh.n_dofs()));
  // Linear model residual at the constrained extension.
  Vector r = K * u_bc;
  if (bc.external_force.size() > 0) r -= bc.external_force;

  Eigen::SimplicialLDLT<SparseMatrix> solver;
  solver.compute(map.restrict_mat(K));
  if (solver.info() != Eigen::Success)
    throw NewtonError("linear elastic factorization failed", {});
  const Vector delta_free = solver.solve(-map.restrict_vec(r));

  Vector u = u_bc;
  for (std::size_t i = 0; i < map.free_to_full.size(); ++i)
    u[map.free_to_full[i]] += delta_free[static_cast<Eigen::Index>(i)];
  return u;
}

}  // namespace schwarz::fe
