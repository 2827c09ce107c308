#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace schwarz {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// One contiguous block of the interface vector belonging to a single
/// interface Gamma_{i,i+1}.
struct InterfaceSlice {
  int id = 0;
  Eigen::Index offset = 0;
  Eigen::Index length = 0;

  bool operator==(const InterfaceSlice&) const = default;
};

struct InterfaceLayout {
  std::vector<InterfaceSlice> slices;

  Eigen::Index total_size() const;

  /// Slices must be disjoint, ordered, and cover [0, total_size).
  void validate() const;

  bool operator==(const InterfaceLayout&) const = default;
};

/// The interface trace vector iterated by the fixed-point loop, together
/// with the slice map describing which block belongs to which interface.
struct InterfaceState {
  Vector values;
  InterfaceLayout layout;

  void validate() const;

  Eigen::VectorBlock<const Vector> slice(int i) const {
    const auto& s = layout.slices.at(static_cast<std::size_t>(i));
    return values.segment(s.offset, s.length);
  }
};

struct ConvergenceCriteria {
  double eps_abs = 1e-8;
  double eps_rel = 1e-8;
  int maxit = 50;

  void validate() const;
};

/// Per-iteration trace of the coupling loop. `wall_time` is the only field
/// excluded from the determinism contract.
struct IterationRecord {
  int k = 0;
  double e_abs = 0.0;
  double e_rel = 0.0;
  bool e_rel_degenerate = false;  // zero-norm trace in a denominator

  bool has_rho = false;           // false for Anderson records
  double rho_used = 0.0;          // slice 0 when several interfaces
  std::vector<double> rho_slices; // one entry per interface for diagonal Aitken

  bool has_memory = false;
  int m_k = 0;
  std::vector<double> alpha;

  double wall_time = 0.0; // seconds
};

struct ConvergenceReport {
  std::vector<IterationRecord> records;
  bool converged = false;
  int iterations = 0;
  InterfaceState final_state;
  std::string failure; // empty unless the run aborted

  const IterationRecord& last() const { return records.back(); }
};

/// Subdomain (or accelerator) solve failure that aborts a coupling run.
class CoupledSolveError : public std::runtime_error {
 public:
  CoupledSolveError(std::string what, int subdomain_id,
                    std::vector<double> residual_history = {})
      : std::runtime_error(std::move(what)),
        subdomain_id(subdomain_id),
        residual_history(std::move(residual_history)) {}

  int subdomain_id;
  std::vector<double> residual_history;
};

}  // namespace schwarz
