#include "schwarz/elasticity/subdomain.hpp"

namespace schwarz::fe {

void SubdomainProblem::validate() const {
  material.validate();
  mesh.validate();
  auto interface_tag_present = [&](FaceRole role, BoundaryTag tag) {
    if ((role == FaceRole::InterfaceDirichlet ||
         role == FaceRole::InterfaceNeumann) &&
        !mesh.boundary_nodes.count(tag))
      throw std::invalid_argument("interface role without a " +
                                  to_string(tag) + " face");
  };
  interface_tag_present(role_left, BoundaryTag::GammaLeft);
  interface_tag_present(role_right, BoundaryTag::GammaRight);
}

Vector extract_trace(const TriMesh& mesh, const Vector& u, BoundaryTag tag) {
  const auto& nodes = mesh.nodes_on(tag);
  Vector out(2 * static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out[2 * static_cast<Eigen::Index>(i)] = u[2 * nodes[i]];
    out[2 * static_cast<Eigen::Index>(i) + 1] = u[2 * nodes[i] + 1];
  }
  return out;
}

Vector extract_traction(const TriMesh& mesh, const MaterialParams& mat,
                        const Vector& u, BoundaryTag tag) {
  const Vector r = assemble_internal_forces(mesh, mat, u);
  const auto& nodes = mesh.nodes_on(tag);
  Vector out(2 * static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out[2 * static_cast<Eigen::Index>(i)] = -r[2 * nodes[i]];
    out[2 * static_cast<Eigen::Index>(i) + 1] = -r[2 * nodes[i] + 1];
  }
  return out;
}

namespace {

void apply_face(const SubdomainProblem& sub, BoundaryData& bc, BoundaryTag tag,
                FaceRole role, double external_value,
                const std::optional<Vector>& dirichlet,
                const std::optional<Vector>& traction) {
  const auto& nodes = sub.mesh.nodes_on(tag);
  switch (role) {
    case FaceRole::ExternalDirichlet:
      for (int n : nodes) bc.prescribe(2 * n, external_value);
      break;
    case FaceRole::ExternalNeumannZero:
      break;
    case FaceRole::InterfaceDirichlet: {
      if (!dirichlet || dirichlet->size() != 2 * Eigen::Index(nodes.size()))
        throw std::invalid_argument("missing or mis-sized interface trace");
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        bc.prescribe(2 * nodes[i], (*dirichlet)[2 * Eigen::Index(i)]);
        bc.prescribe(2 * nodes[i] + 1, (*dirichlet)[2 * Eigen::Index(i) + 1]);
      }
      break;
    }
    case FaceRole::InterfaceNeumann: {
      if (!traction || traction->size() != 2 * Eigen::Index(nodes.size()))
        throw std::invalid_argument("missing or mis-sized interface traction");
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        bc.external_force[2 * nodes[i]] += (*traction)[2 * Eigen::Index(i)];
        bc.external_force[2 * nodes[i] + 1] +=
            (*traction)[2 * Eigen::Index(i) + 1];
      }
      break;
    }
  }
}

}  // namespace

BoundaryData make_boundary_data(const SubdomainProblem& sub,
                                const InterfaceData& data) {
  BoundaryData bc;
  bc.external_force = Vector::Zero(sub.mesh.n_dofs());

  // Sliding supports first so they win the bottom corners.
  for (int n : sub.mesh.nodes_on(BoundaryTag::Sigma3)) bc.prescribe(2 * n + 1, 0.0);

  const bool left_external = sub.role_left == FaceRole::ExternalDirichlet ||
                             sub.role_left == FaceRole::ExternalNeumannZero;
  apply_face(sub, bc, left_external ? BoundaryTag::Sigma1 : BoundaryTag::GammaLeft,
             sub.role_left, sub.external_value_left, data.dirichlet_left,
             data.traction_left);
  const bool right_external = sub.role_right == FaceRole::ExternalDirichlet ||
                              sub.role_right == FaceRole::ExternalNeumannZero;
  apply_face(sub, bc,
             right_external ? BoundaryTag::Sigma2 : BoundaryTag::GammaRight,
             sub.role_right, sub.external_value_right, data.dirichlet_right,
             data.traction_right);
  return bc;
}

Vector solve_subdomain(const SubdomainProblem& sub, const InterfaceData& data,
                       const Vector* u_prev) {
  const BoundaryData bc = make_boundary_data(sub, data);
  Vector guess;
  if (sub.warm_start) {
    guess = linear_elastic_solve(sub.mesh, sub.material, bc);
  } else if (u_prev && u_prev->size() == sub.mesh.n_dofs()) {
    guess = *u_prev;
  } else {
    guess = Vector::Zero(sub.mesh.n_dofs());
  }
  return newton_solve(sub.mesh, sub.material, bc, guess, sub.newton).u;
}

}  // namespace schwarz::fe
