#pragma once

#include "schwarz/coupled_problem.hpp"

#include <functional>

namespace schwarz {

/// Scalar fixed-point map g -> T(g) wrapped as a one-component coupled
/// problem. Used for convergence-rate studies on smooth maps.
class ScalarMapProblem : public CoupledProblem {
 public:
  explicit ScalarMapProblem(std::function<double(double)> map)
      : map_(std::move(map)) {
    layout_.slices = {{0, 0, 1}};
  }

  const InterfaceLayout& interface_layout() const override { return layout_; }

  Vector evaluate(const Vector& g) override {
    Vector out(1);
    out[0] = map_(g[0]);
    return out;
  }

  InterfaceState initial_state(double g0) const {
    InterfaceState s;
    s.values = Vector::Constant(1, g0);
    s.layout = layout_;
    return s;
  }

 private:
  std::function<double(double)> map_;
  InterfaceLayout layout_;
};

}  // namespace schwarz
