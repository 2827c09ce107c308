#pragma once

#include "schwarz/coupled_problem.hpp"

namespace schwarz {

/// Two-subdomain split of -u'' = 0 on (0,1), u(0)=0, u(1)=1, with the
/// interface at x_bar. The left subdomain receives the Dirichlet trace, the
/// right one the flux.
struct Laplace1DConfig {
  double x_bar = 0.5;
  int n_points = 20;  // grid points per subdomain
  double g_init = 0.3;

  void validate() const;
};

/// Finite-difference solve of -u'' = 0 on (0, x_bar) with u(0) = 0,
/// u(x_bar) = g on a uniform n-point grid. Returns the nodal values.
Vector solve_dirichlet_1d(double x_bar, double g, int n);

/// Finite-difference solve of -u'' = 0 on (x_bar, 1) with u(1) = 1 and
/// u'(x_bar) = flux imposed through a one-sided second-order stencil.
Vector solve_neumann_1d(double x_bar, double flux, int n);

/// Derivative of the Dirichlet-side solution at its right endpoint x_bar,
/// taken as the end-to-end slope of the discrete linear solution.
double dirichlet_flux_1d(const Vector& u, double x_bar);

/// Closed-form interface map T(g) = (1 - 1/x_bar) g + 1; oracle for the
/// finite-difference composition.
double analytic_T(double x_bar, double g);

/// Asymptotic error ratio |1 - rho/x_bar| of classical relaxation;
/// convergence iff the value is below 1.
double analytic_convergence_factor(double x_bar, double rho);

class Laplace1DProblem : public CoupledProblem {
 public:
  explicit Laplace1DProblem(const Laplace1DConfig& config);

  const InterfaceLayout& interface_layout() const override { return layout_; }
  Vector evaluate(const Vector& g) override;

  InterfaceState initial_state() const;

  /// Sub-solutions of the last sweep (Dirichlet side, Neumann side).
  const Vector& last_dirichlet_solution() const { return u1_; }
  const Vector& last_neumann_solution() const { return u2_; }

  const Laplace1DConfig& config() const { return config_; }

 private:
  Laplace1DConfig config_;
  InterfaceLayout layout_;
  Vector u1_, u2_;
};

}  // namespace schwarz
