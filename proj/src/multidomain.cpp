#include "schwarz/multidomain.hpp"

#include <sstream>

namespace schwarz {

using fe::BoundaryTag;
using fe::FaceRole;

void ChainConfig::validate() const {
  std::ostringstream bad;
  if (n_dd < 2) bad << "n_dd must be at least 2; ";
  if (elements_per_edge < 2) bad << "elements_per_edge must be at least 2; ";
  material.validate();
  if (bad.tellp() > 0)
    throw std::invalid_argument("invalid chain config: " + bad.str());
}

DecompositionPlan DecompositionPlan::build(const ChainConfig& config) {
  config.validate();
  DecompositionPlan plan;
  plan.config = config;

  const int m = config.elements_per_edge;
  for (int i = 0; i < config.n_dd; ++i) {
    fe::SubdomainProblem sub;
    sub.id = i;
    const bool first = (i == 0);
    const bool last = (i == config.n_dd - 1);
    sub.mesh = fe::make_rect_mesh(
        double(i), double(i + 1), 0.0, 1.0, m, m,
        first ? BoundaryTag::Sigma1 : BoundaryTag::GammaLeft,
        last ? BoundaryTag::Sigma2 : BoundaryTag::GammaRight);
    sub.material = config.material;
    sub.role_left = first ? FaceRole::ExternalDirichlet : FaceRole::InterfaceNeumann;
    sub.role_right = last ? FaceRole::ExternalDirichlet : FaceRole::InterfaceDirichlet;
    sub.external_value_left = 0.0;
    sub.external_value_right = config.pull;
    sub.newton = config.newton;
    sub.warm_start = config.warm_start;
    sub.validate();
    plan.subdomains.push_back(std::move(sub));
  }

  const Eigen::Index slice_len = 2 * (m + 1);
  for (int i = 0; i < config.n_dd - 1; ++i)
    plan.layout.slices.push_back({i, i * slice_len, slice_len});
  plan.layout.validate();
  return plan;
}

ElasticChainProblem::ElasticChainProblem(const ChainConfig& config)
    : plan_(DecompositionPlan::build(config)) {
  const int m = config.elements_per_edge;
  global_mesh_ = fe::make_rect_mesh(0.0, double(config.n_dd), 0.0, 1.0,
                                    m * config.n_dd, m, BoundaryTag::Sigma1,
                                    BoundaryTag::Sigma2);
  solutions_.resize(std::size_t(config.n_dd));
}

Vector ElasticChainProblem::evaluate(const Vector& g) {
  if (g.size() != plan_.layout.total_size())
    throw std::invalid_argument("interface vector does not match the layout");

  const int n = plan_.config.n_dd;
  Vector out(g.size());
  Vector traction;  // produced by the previous subdomain's right face

  for (int i = 0; i < n; ++i) {
    const auto& sub = plan_.subdomains[std::size_t(i)];
    fe::InterfaceData data;
    if (i > 0) data.traction_left = traction;
    if (i < n - 1) {
      const auto& s = plan_.layout.slices[std::size_t(i)];
      data.dirichlet_right = Vector(g.segment(s.offset, s.length));
    }

    Vector u;
    try {
      u = fe::solve_subdomain(sub, data, &solutions_[std::size_t(i)]);
    } catch (const fe::NewtonError& err) {
      throw CoupledSolveError(
          "subdomain " + std::to_string(i) + ": " + err.what(), i,
          err.residual_history);
    } catch (const fe::InvertedElementError& err) {
      throw CoupledSolveError("subdomain " + std::to_string(i) + ": " +
                                  err.what(),
                              i);
    }
    solutions_[std::size_t(i)] = u;

    if (i < n - 1)
      traction = fe::extract_traction(sub.mesh, sub.material, u,
                                      BoundaryTag::GammaRight);
    if (i > 0) {
      const auto& s = plan_.layout.slices[std::size_t(i - 1)];
      out.segment(s.offset, s.length) =
          fe::extract_trace(sub.mesh, u, BoundaryTag::GammaLeft);
    }
  }
  return out;
}

InterfaceState ElasticChainProblem::zero_state() const {
  InterfaceState s;
  s.values = Vector::Zero(plan_.layout.total_size());
  s.layout = plan_.layout;
  return s;
}

const Vector& ElasticChainProblem::monolithic_solution() const {
  if (monolithic_.size() == 0)
    monolithic_ = fe::solve_monolithic(global_mesh_, plan_.config.material,
                                       plan_.config.pull, plan_.config.newton);
  return monolithic_;
}

Vector ElasticChainProblem::restrict_global(const Vector& u_global,
                                            int subdomain) const {
  const int m = plan_.config.elements_per_edge;
  const auto& sub_mesh = plan_.subdomains[std::size_t(subdomain)].mesh;
  Vector out(sub_mesh.n_dofs());
  for (int ix = 0; ix <= m; ++ix)
    for (int iy = 0; iy <= m; ++iy) {
      const int ls = sub_mesh.node_index(ix, iy);
      const int lg = global_mesh_.node_index(subdomain * m + ix, iy);
      out[2 * ls] = u_global[2 * lg];
      out[2 * ls + 1] = u_global[2 * lg + 1];
    }
  return out;
}

std::vector<double> ElasticChainProblem::e_max_per_subdomain(
    const Vector& u_global) const {
  std::vector<double> out;
  for (int i = 0; i < plan_.config.n_dd; ++i) {
    if (solutions_[std::size_t(i)].size() == 0)
      throw std::logic_error("no sub-solutions available yet");
    out.push_back(fe::e_max(solutions_[std::size_t(i)],
                            restrict_global(u_global, i)));
  }
  return out;
}

Vector ElasticChainProblem::traces_from_global(const Vector& u_global) const {
  Vector g(plan_.layout.total_size());
  for (int i = 0; i + 1 < plan_.config.n_dd; ++i) {
    const Vector u_right = restrict_global(u_global, i + 1);
    const auto& s = plan_.layout.slices[std::size_t(i)];
    g.segment(s.offset, s.length) = fe::extract_trace(
        plan_.subdomains[std::size_t(i + 1)].mesh, u_right,
        BoundaryTag::GammaLeft);
  }
  return g;
}

}  // namespace schwarz
