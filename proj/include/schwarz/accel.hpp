#pragma once

#include "schwarz/types.hpp"

#include <deque>
#include <memory>
#include <optional>

namespace schwarz {

enum class AcceleratorKind { Unrelaxed, Classical, Aitken, Anderson };

struct AcceleratorConfig {
  AcceleratorKind kind = AcceleratorKind::Classical;
  double rho = 1.0;       // fixed relaxation / Anderson mixing parameter
  double rho_init = 1.0;  // Aitken warm-up value rho^(1)
  int n0 = 2;             // Aitken warm-up length; the dynamic update starts at k = n0
  int m_and = 1;          // Anderson history bound
  bool memory_adaptation = false;
  int m_bar = 3;          // shrunk window once the relative error stagnates
  double eps_and = 1e-5;  // stagnation threshold on |e_rel^(k) - e_rel^(k-1)|

  void validate() const;  // throws std::invalid_argument listing violations
};

/// Classical relaxation step (1-rho) g + rho T(g).
Vector update_classical(const Vector& g, const Vector& Tg, double rho);

/// Secant value -(delta . d) / ||delta||^2. Caller must guarantee
/// ||delta|| > 0; a stagnant jump is handled by the caller's safeguard.
double aitken_rho(const Vector& d_k, const Vector& delta_k);

/// Clamp: values above 1 go to 1, non-positive values revert to rho_init.
double aitken_safeguard(double rho_raw, double rho_init);

/// State threaded through successive Aitken updates of one interface block.
struct AitkenState {
  Vector prev_trace; // g^(k-1), the previously applied Dirichlet trace
  Vector prev_jump;  // E^(k-1) = T(g^(k-1)) - g^(k-1)
  double rho_current = 0.0;
  bool has_prev = false;
};

/// One Aitken step on one interface block. For k < n0 the warm-up value
/// rho_init is applied; afterwards the secant value with safeguards. The
/// jump is E = Tg - g and the update g + rho E.
std::pair<Vector, AitkenState> update_aitken(const AitkenState& state,
                                             const Vector& g, const Vector& Tg,
                                             int k,
                                             const AcceleratorConfig& config);

/// Sliding window of fixed-point iterates and residuals, oldest first.
class ResidualHistory {
 public:
  explicit ResidualHistory(int capacity) : capacity_(capacity) {}

  void push(const Vector& g, const Vector& f);
  int size() const { return static_cast<int>(f_history_.size()); }
  int capacity() const { return capacity_; }

  const Vector& g(int i) const { return g_history_[static_cast<std::size_t>(i)]; }
  const Vector& f(int i) const { return f_history_[static_cast<std::size_t>(i)]; }

  /// Matrix of the newest (m+1) residual columns, oldest first.
  Matrix residual_matrix(int m) const;

 private:
  int capacity_;
  std::deque<Vector> g_history_;
  std::deque<Vector> f_history_;
};

/// Anderson mixing over the newest m_k+1 history entries:
///   g_next = sum_j alpha_j [ (1-rho) g_j + rho T(g_j) ]
/// with alpha from the constrained least-squares problem on the residual
/// columns. Requires history.size() >= m_k + 1.
Vector update_anderson(const ResidualHistory& history, double rho, int m_k,
                       Vector* alpha_out = nullptr);

/// Window size for Anderson with memory adaptation: min(m_bar, m_and) once
/// successive relative errors differ by less than eps_and (and k > 2),
/// otherwise min(k, m_and).
int adapt_memory(int k, double e_rel_curr, double e_rel_prev,
                 const AcceleratorConfig& config);

/// What an accelerator reports back to the loop for the iteration record.
struct AccelUpdate {
  Vector g_next;
  bool has_rho = false;
  double rho = 0.0;
  std::vector<double> rho_slices;
  bool has_memory = false;
  int m_k = 0;
  Vector alpha;
};

/// Data the loop makes available to the accelerator before an update.
struct StepContext {
  std::optional<double> e_rel_prev;  // e_rel of iteration k-1
  std::optional<double> e_rel_prev2; // e_rel of iteration k-2
};

/// Strategy interface used by run_schwarz. Implementations are stateful
/// across iterations of one run; reset() rebinds them to a layout.
class InterfaceAccelerator {
 public:
  virtual ~InterfaceAccelerator() = default;
  virtual void reset(const InterfaceLayout& layout) = 0;
  virtual AccelUpdate update(int k, const Vector& g, const Vector& Tg,
                             const StepContext& ctx) = 0;
};

/// Factory for the four strategies. Aitken acts per interface slice
/// (diagonal variant); with a single interface this is the plain scheme.
/// Anderson operates on the concatenated interface vector.
std::unique_ptr<InterfaceAccelerator> make_accelerator(
    const AcceleratorConfig& config);

}  // namespace schwarz
