#include "schwarz/laplace1d.hpp"

#include <cmath>
#include <sstream>

namespace schwarz {

void Laplace1DConfig::validate() const {
  std::ostringstream bad;
  if (!(x_bar > 0.0 && x_bar < 1.0)) bad << "x_bar must lie in (0,1); ";
  if (n_points < 3) bad << "n_points must be at least 3; ";
  if (bad.tellp() > 0)
    throw std::invalid_argument("invalid 1d config: " + bad.str());
}

namespace {

// Thomas solve; the systems here are diagonally dominant, no pivoting.
Vector solve_tridiagonal(Vector lower, Vector diag, Vector upper, Vector rhs) {
  const Eigen::Index n = diag.size();
  for (Eigen::Index i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  Vector u(n);
  u[n - 1] = rhs[n - 1] / diag[n - 1];
  for (Eigen::Index i = n - 2; i >= 0; --i)
    u[i] = (rhs[i] - upper[i] * u[i + 1]) / diag[i];
  return u;
}

}  // namespace

Vector solve_dirichlet_1d([[maybe_unused]] double x_bar, double g, int n) {
  // -u'' = 0 with both endpoint values prescribed. The grid spacing drops
  // out of the homogeneous equation.
  Vector lower = Vector::Constant(n, -1.0);
  Vector diag = Vector::Constant(n, 2.0);
  Vector upper = Vector::Constant(n, -1.0);
  Vector rhs = Vector::Zero(n);
  diag[0] = 1.0;
  upper[0] = 0.0;
  diag[n - 1] = 1.0;
  lower[n - 1] = 0.0;
  rhs[n - 1] = g;
  return solve_tridiagonal(lower, diag, upper, rhs);
}

Vector solve_neumann_1d(double x_bar, double flux, int n) {
  const double h = (1.0 - x_bar) / double(n - 1);
  // One-sided second-order stencil (-3 u0 + 4 u1 - u2) / 2h = flux for the
  // boundary derivative. Eliminating u2 with the adjacent interior equation
  // -u0 + 2 u1 - u2 = 0 turns the first row into (u1 - u0)/h = flux without
  // changing the system, which keeps it tridiagonal.
  Vector lower = Vector::Constant(n, -1.0);
  Vector diag = Vector::Constant(n, 2.0);
  Vector upper = Vector::Constant(n, -1.0);
  Vector rhs = Vector::Zero(n);
  diag[0] = -1.0 / h;
  upper[0] = 1.0 / h;
  rhs[0] = flux;
  diag[n - 1] = 1.0;
  lower[n - 1] = 0.0;
  rhs[n - 1] = 1.0;
  return solve_tridiagonal(lower, diag, upper, rhs);
}

double dirichlet_flux_1d(const Vector& u, double x_bar) {
  // The discrete solution is linear, so its derivative is the end-to-end
  // slope; this avoids the cancellation noise of a local stencil while
  // agreeing with it to round-off.
  const int n = static_cast<int>(u.size());
  return (u[n - 1] - u[0]) / x_bar;
}

double analytic_T(double x_bar, double g) {
  return (1.0 - 1.0 / x_bar) * g + 1.0;
}

double analytic_convergence_factor(double x_bar, double rho) {
  return std::abs(1.0 - rho / x_bar);
}

Laplace1DProblem::Laplace1DProblem(const Laplace1DConfig& config)
    : config_(config) {
  config_.validate();
  layout_.slices = {{0, 0, 1}};
}

Vector Laplace1DProblem::evaluate(const Vector& g) {
  u1_ = solve_dirichlet_1d(config_.x_bar, g[0], config_.n_points);
  const double flux = dirichlet_flux_1d(u1_, config_.x_bar);
  u2_ = solve_neumann_1d(config_.x_bar, flux, config_.n_points);
  Vector out(1);
  out[0] = u2_[0];  // trace at the interface
  return out;
}

InterfaceState Laplace1DProblem::initial_state() const {
  InterfaceState s;
  s.values = Vector::Constant(1, config_.g_init);
  s.layout = layout_;
  return s;
}

}  // namespace schwarz
