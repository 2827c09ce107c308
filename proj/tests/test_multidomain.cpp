#include "schwarz/multidomain.hpp"

#include "schwarz/schwarz_loop.hpp"

#include "doctest.h"

#include <cmath>

using namespace schwarz;

namespace {

ChainConfig desk_chain(int n_dd, int m = 8) {
  ChainConfig c;
  c.n_dd = n_dd;
  c.elements_per_edge = m;
  return c;
}

AcceleratorConfig classical(double rho) {
  AcceleratorConfig c;
  c.kind = AcceleratorKind::Classical;
  c.rho = rho;
  return c;
}

}  // namespace

TEST_CASE("plan assigns the chain roles") {
  auto plan = DecompositionPlan::build(desk_chain(4, 4));
  REQUIRE(plan.subdomains.size() == 4);
  CHECK(plan.subdomains[0].role_left == fe::FaceRole::ExternalDirichlet);
  CHECK(plan.subdomains[0].role_right == fe::FaceRole::InterfaceDirichlet);
  for (int i = 1; i < 3; ++i) {
    CHECK(plan.subdomains[std::size_t(i)].role_left ==
          fe::FaceRole::InterfaceNeumann);
    CHECK(plan.subdomains[std::size_t(i)].role_right ==
          fe::FaceRole::InterfaceDirichlet);
  }
  CHECK(plan.subdomains[3].role_left == fe::FaceRole::InterfaceNeumann);
  CHECK(plan.subdomains[3].role_right == fe::FaceRole::ExternalDirichlet);
  CHECK(plan.layout.slices.size() == 3);
  CHECK(plan.layout.slices[1].length == 2 * 5);

  CHECK_THROWS_AS(DecompositionPlan::build(desk_chain(1)),
                  std::invalid_argument);
}

TEST_CASE("monolithic traces are a fixed point of the sweep") {
  ElasticChainProblem chain(desk_chain(3, 6));
  const Vector g_star = chain.traces_from_global(chain.monolithic_solution());
  const Vector Tg = chain.evaluate(g_star);
  CHECK((Tg - g_star).cwiseAbs().maxCoeff() <= 1e-6);

  // Starting the loop there terminates after a single iteration with an
  // error at the level of the subdomain solver tolerance.
  auto accel = make_accelerator(classical(0.5));
  InterfaceState s{g_star, chain.interface_layout()};
  auto rep = run_schwarz(chain, *accel, {1e-5, 1e-5, 50}, s);
  CHECK(rep.converged);
  CHECK(rep.iterations == 1);
  CHECK(rep.last().e_abs <= 10.0 * 1e-6);
}

TEST_CASE("two-domain sweep matches the dedicated two-domain path") {
  // The chain of length 2 must agree with assembling the exchange by hand.
  ElasticChainProblem chain(desk_chain(2, 6));
  const auto& plan = chain.plan();

  Vector g = Vector::Zero(plan.layout.total_size());
  g[4] = 0.02;
  g[6] = -0.01;
  const Vector Tg_chain = chain.evaluate(g);

  fe::InterfaceData left_data;
  left_data.dirichlet_right = g;
  const Vector u1 = fe::solve_subdomain(plan.subdomains[0], left_data);
  fe::InterfaceData right_data;
  right_data.traction_left = fe::extract_traction(
      plan.subdomains[0].mesh, plan.config.material, u1,
      fe::BoundaryTag::GammaRight);
  const Vector u2 = fe::solve_subdomain(plan.subdomains[1], right_data);
  const Vector Tg_manual =
      fe::extract_trace(plan.subdomains[1].mesh, u2, fe::BoundaryTag::GammaLeft);

  // Chain of length two is bit-compatible with the hand-assembled exchange.
  CHECK((Tg_chain - Tg_manual).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("two-domain coupling converges and matches the monolithic solve") {
  ElasticChainProblem chain(desk_chain(2, 8));
  auto accel = make_accelerator(classical(0.5));
  auto rep = run_schwarz(chain, *accel, {1e-6, 1e-6, 100}, chain.zero_state());
  REQUIRE(rep.converged);
  CHECK(rep.iterations < 100);

  const auto errs = chain.e_max_per_subdomain(chain.monolithic_solution());
  for (double e : errs) CHECK(e <= 1e-5);

  // Conforming interface: both sides agree on the trace at convergence.
  const auto& plan = chain.plan();
  const Vector tl = fe::extract_trace(plan.subdomains[0].mesh,
                                      chain.last_solutions()[0],
                                      fe::BoundaryTag::GammaRight);
  const Vector tr = fe::extract_trace(plan.subdomains[1].mesh,
                                      chain.last_solutions()[1],
                                      fe::BoundaryTag::GammaLeft);
  CHECK((tl - tr).cwiseAbs().maxCoeff() <= 1e-5);
}

TEST_CASE("interface flux balances at convergence for a three-domain chain") {
  ElasticChainProblem chain(desk_chain(3, 6));
  AcceleratorConfig cfg;
  cfg.kind = AcceleratorKind::Anderson;
  cfg.m_and = 4;
  cfg.rho = 0.5;
  auto accel = make_accelerator(cfg);
  auto rep = run_schwarz(chain, *accel, {1e-7, 1e-7, 120}, chain.zero_state());
  REQUIRE(rep.converged);

  const auto& plan = chain.plan();
  for (int i = 0; i + 1 < 3; ++i) {
    const Vector t_dir = fe::extract_traction(
        plan.subdomains[std::size_t(i)].mesh, plan.config.material,
        chain.last_solutions()[std::size_t(i)], fe::BoundaryTag::GammaRight);
    const Vector t_neu = fe::extract_traction(
        plan.subdomains[std::size_t(i + 1)].mesh, plan.config.material,
        chain.last_solutions()[std::size_t(i + 1)], fe::BoundaryTag::GammaLeft);
    CHECK((t_dir + t_neu).cwiseAbs().maxCoeff() <= 10 * 1e-5);
  }
}

TEST_CASE("diagonal aitken on one interface equals the plain update") {
  AcceleratorConfig cfg;
  cfg.kind = AcceleratorKind::Aitken;
  cfg.rho_init = 0.4;
  cfg.n0 = 2;

  InterfaceLayout one;
  one.slices = {{0, 0, 3}};
  auto accel = make_accelerator(cfg);
  accel->reset(one);

  Vector g(3), Tg(3);
  g << 0.1, 0.2, 0.3;
  Tg << 0.4, 0.1, 0.5;
  auto up1 = accel->update(1, g, Tg, {});

  AitkenState st;
  auto [plain, st1] = update_aitken(st, g, Tg, 1, cfg);
  CHECK((up1.g_next - plain).cwiseAbs().maxCoeff() == 0.0);

  Vector Tg2(3);
  Tg2 << 0.35, 0.15, 0.45;
  auto up2 = accel->update(2, up1.g_next, Tg2, {});
  auto [plain2, st2] = update_aitken(st1, plain, Tg2, 2, cfg);
  CHECK((up2.g_next - plain2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(up2.rho == st2.rho_current);
}

TEST_CASE("diagonal aitken keeps per-interface parameters independent") {
  AcceleratorConfig cfg;
  cfg.kind = AcceleratorKind::Aitken;
  cfg.rho_init = 1.0;
  cfg.n0 = 2;

  InterfaceLayout two;
  two.slices = {{0, 0, 1}, {1, 1, 1}};
  auto accel = make_accelerator(cfg);
  accel->reset(two);

  // Two decoupled affine maps with different secant values.
  auto T = [](const Vector& g) {
    Vector out(2);
    out[0] = (1.0 - 1.0 / 0.7) * g[0] + 1.0;
    out[1] = (1.0 - 1.0 / 0.4) * g[1] + 1.0;
    return out;
  };
  Vector g(2);
  g << 0.3, 0.3;
  auto up1 = accel->update(1, g, T(g), {});
  auto up2 = accel->update(2, up1.g_next, T(up1.g_next), {});
  REQUIRE(up2.rho_slices.size() == 2);
  CHECK(up2.rho_slices[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(up2.rho_slices[1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(up2.g_next[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(up2.g_next[1] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("subdomain failure carries the subdomain id") {
  ElasticChainProblem chain(desk_chain(2, 4));
  // An enormous interface displacement inverts the first subdomain.
  Vector g = Vector::Constant(chain.interface_layout().total_size(), 0.0);
  for (Eigen::Index i = 0; i < g.size(); i += 2) g[i] = -5.0;
  try {
    chain.evaluate(g);
    FAIL("expected a solve failure");
  } catch (const CoupledSolveError& err) {
    CHECK(err.subdomain_id == 0);
  }
}
