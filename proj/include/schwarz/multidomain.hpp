#pragma once

#include "schwarz/coupled_problem.hpp"
#include "schwarz/elasticity/monolithic.hpp"

namespace schwarz {

/// Linear-in-x chain of unit-square subdomains on [0, n_dd] x [0, 1]. The
/// bar is stretched by `pull` at its right end. Dirichlet sits on right
/// interface faces, Neumann on left ones, so the sweep runs left to right.
struct ChainConfig {
  int n_dd = 2;
  int elements_per_edge = 20;  // per unit square; 21x21 nodes at the default
  fe::MaterialParams material{1440.0, 0.25};
  double pull = 1.0;
  fe::NewtonOptions newton{1e-8, 30, 20};
  bool warm_start = true;

  void validate() const;
};

/// Subdomain roles and interface bookkeeping for a chain decomposition.
struct DecompositionPlan {
  ChainConfig config;
  std::vector<fe::SubdomainProblem> subdomains;
  InterfaceLayout layout;  // one slice of length 2*(ny+1) per interface

  static DecompositionPlan build(const ChainConfig& config);
};

class ElasticChainProblem : public CoupledProblem {
 public:
  explicit ElasticChainProblem(const ChainConfig& config);

  const InterfaceLayout& interface_layout() const override {
    return plan_.layout;
  }

  /// Left-to-right multiplicative sweep: the first subdomain sees Dirichlet
  /// data on its right face, every later one the traction just produced by
  /// its left neighbour plus Dirichlet data on its right face. Returns the
  /// left-face traces of subdomains 2..n_dd in interface order.
  Vector evaluate(const Vector& g) override;

  InterfaceState zero_state() const;

  const DecompositionPlan& plan() const { return plan_; }
  const std::vector<Vector>& last_solutions() const { return solutions_; }

  /// Reference quantities against the single-domain solve.
  const Vector& monolithic_solution() const;
  const fe::TriMesh& global_mesh() const { return global_mesh_; }
  Vector restrict_global(const Vector& u_global, int subdomain) const;
  std::vector<double> e_max_per_subdomain(const Vector& u_global) const;

  /// Interface trace vector induced by a global field; the fixed point of
  /// the sweep up to solver tolerance.
  Vector traces_from_global(const Vector& u_global) const;

 private:
  DecompositionPlan plan_;
  fe::TriMesh global_mesh_;
  std::vector<Vector> solutions_;
  mutable Vector monolithic_;  // cached on first use
};

}  // namespace schwarz
