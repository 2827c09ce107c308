#include "schwarz/accel.hpp"

#include "schwarz/least_squares.hpp"

#include <cmath>
#include <sstream>

namespace schwarz {

void AcceleratorConfig::validate() const {
  std::ostringstream bad;
  if (kind != AcceleratorKind::Unrelaxed)
    if (!(rho > 0.0 && rho <= 1.0)) bad << "rho must lie in (0,1]; ";
  if (!(rho_init > 0.0 && rho_init <= 1.0))
    bad << "rho_init must lie in (0,1]; ";
  if (kind == AcceleratorKind::Aitken) {
    if (n0 < 2) bad << "n0 must be at least 2; ";
  }
  if (kind == AcceleratorKind::Anderson) {
    if (m_and < 1) bad << "m_and must be positive; ";
    if (memory_adaptation) {
      if (m_bar < 1) bad << "m_bar must be positive; ";
      if (m_bar > m_and) bad << "m_bar must not exceed m_and; ";
      if (!(eps_and > 0.0)) bad << "eps_and must be positive; ";
    }
  }
  if (bad.tellp() > 0)
    throw std::invalid_argument("invalid accelerator config: " + bad.str());
}

Vector update_classical(const Vector& g, const Vector& Tg, double rho) {
  if (g.size() != Tg.size())
    throw std::invalid_argument("update_classical: length mismatch");
  return (1.0 - rho) * g + rho * Tg;
}

double aitken_rho(const Vector& d_k, const Vector& delta_k) {
  const double dn2 = delta_k.squaredNorm();
  if (dn2 == 0.0)
    throw std::invalid_argument("aitken_rho: stagnant jump (||delta|| = 0)");
  return -delta_k.dot(d_k) / dn2;
}

double aitken_safeguard(double rho_raw, double rho_init) {
  if (rho_raw > 1.0) return 1.0;
  if (rho_raw <= 0.0) return rho_init;
  return rho_raw;
}

std::pair<Vector, AitkenState> update_aitken(const AitkenState& state,
                                             const Vector& g, const Vector& Tg,
                                             int k,
                                             const AcceleratorConfig& config) {
  const Vector jump = Tg - g;

  double rho;
  if (k < config.n0 || !state.has_prev) {
    rho = config.rho_init;
  } else {
    const Vector d = g - state.prev_trace;
    const Vector delta = jump - state.prev_jump;
    if (delta.squaredNorm() == 0.0) {
      rho = config.rho_init;  // stagnant jump, fall back
    } else {
      rho = aitken_safeguard(aitken_rho(d, delta), config.rho_init);
    }
  }

  AitkenState next;
  next.prev_trace = g;
  next.prev_jump = jump;
  next.rho_current = rho;
  next.has_prev = true;
  return {g + rho * jump, next};
}

void ResidualHistory::push(const Vector& g, const Vector& f) {
  g_history_.push_back(g);
  f_history_.push_back(f);
  while (static_cast<int>(f_history_.size()) > capacity_) {
    g_history_.pop_front();
    f_history_.pop_front();
  }
}

Matrix ResidualHistory::residual_matrix(int m) const {
  if (m + 1 > size())
    throw std::invalid_argument("residual history shorter than window");
  const int first = size() - (m + 1);
  Matrix F(f_history_.front().size(), m + 1);
  for (int j = 0; j <= m; ++j) F.col(j) = f_history_[std::size_t(first + j)];
  return F;
}

Vector update_anderson(const ResidualHistory& history, double rho, int m_k,
                       Vector* alpha_out) {
  const Matrix F = history.residual_matrix(m_k);
  const Vector alpha = solve_constrained_ls(F);
  if (alpha_out) *alpha_out = alpha;

  const int first = history.size() - (m_k + 1);
  Vector g_next = Vector::Zero(history.g(0).size());
  for (int j = 0; j <= m_k; ++j) {
    const Vector& gj = history.g(first + j);
    const Vector& fj = history.f(first + j);
    // (1-rho) g_j + rho T(g_j) with T(g_j) = g_j + f_j
    g_next += alpha[j] * (gj + rho * fj);
  }
  return g_next;
}

int adapt_memory(int k, double e_rel_curr, double e_rel_prev,
                 const AcceleratorConfig& config) {
  const bool stagnant = std::isfinite(e_rel_curr) && std::isfinite(e_rel_prev) &&
                        std::abs(e_rel_curr - e_rel_prev) < config.eps_and;
  if (stagnant && k > 2) return std::min(config.m_bar, config.m_and);
  return std::min(k, config.m_and);
}

namespace {

class ClassicalAccelerator final : public InterfaceAccelerator {
 public:
  explicit ClassicalAccelerator(double rho) : rho_(rho) {}

  void reset(const InterfaceLayout&) override {}

  AccelUpdate update(int, const Vector& g, const Vector& Tg,
                     const StepContext&) override {
    AccelUpdate u;
    u.g_next = update_classical(g, Tg, rho_);
    u.has_rho = true;
    u.rho = rho_;
    u.rho_slices = {rho_};
    return u;
  }

 private:
  double rho_;
};

// Aitken applied independently on every interface slice (diagonal variant);
// identical to the plain scheme when there is a single interface.
class AitkenAccelerator final : public InterfaceAccelerator {
 public:
  explicit AitkenAccelerator(const AcceleratorConfig& config)
      : config_(config) {}

  void reset(const InterfaceLayout& layout) override {
    layout_ = layout;
    states_.assign(layout.slices.size(), AitkenState{});
  }

  AccelUpdate update(int k, const Vector& g, const Vector& Tg,
                     const StepContext&) override {
    AccelUpdate u;
    u.g_next.resize(g.size());
    u.has_rho = true;
    for (std::size_t i = 0; i < layout_.slices.size(); ++i) {
      const auto& s = layout_.slices[i];
      auto [gi, si] = update_aitken(states_[i], g.segment(s.offset, s.length),
                                    Tg.segment(s.offset, s.length), k, config_);
      u.g_next.segment(s.offset, s.length) = gi;
      states_[i] = si;
      u.rho_slices.push_back(si.rho_current);
    }
    u.rho = u.rho_slices.front();
    return u;
  }

 private:
  AcceleratorConfig config_;
  InterfaceLayout layout_;
  std::vector<AitkenState> states_;
};

class AndersonAccelerator final : public InterfaceAccelerator {
 public:
  explicit AndersonAccelerator(const AcceleratorConfig& config)
      : config_(config), history_(config.m_and + 1) {}

  void reset(const InterfaceLayout&) override {
    history_ = ResidualHistory(config_.m_and + 1);
  }

  AccelUpdate update(int k, const Vector& g, const Vector& Tg,
                     const StepContext& ctx) override {
    history_.push(g, Tg - g);

    // k-1 previous steps exist; the window never exceeds the stored history.
    int m_k = std::min(k - 1, config_.m_and);
    if (config_.memory_adaptation && ctx.e_rel_prev && ctx.e_rel_prev2) {
      m_k = std::min(adapt_memory(k - 1, *ctx.e_rel_prev, *ctx.e_rel_prev2,
                                  config_),
                     history_.size() - 1);
    }

    AccelUpdate u;
    Vector alpha;
    u.g_next = update_anderson(history_, config_.rho, m_k, &alpha);
    u.has_memory = true;
    u.m_k = m_k;
    u.alpha = alpha;
    return u;
  }

 private:
  AcceleratorConfig config_;
  ResidualHistory history_;
};

}  // namespace

std::unique_ptr<InterfaceAccelerator> make_accelerator(
    const AcceleratorConfig& config) {
  config.validate();
  switch (config.kind) {
    case AcceleratorKind::Unrelaxed:
      return std::make_unique<ClassicalAccelerator>(1.0);
    case AcceleratorKind::Classical:
      return std::make_unique<ClassicalAccelerator>(config.rho);
    case AcceleratorKind::Aitken:
      return std::make_unique<AitkenAccelerator>(config);
    case AcceleratorKind::Anderson:
      return std::make_unique<AndersonAccelerator>(config);
  }
  throw std::logic_error("unknown accelerator kind");
}

}  // namespace schwarz
