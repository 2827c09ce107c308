#include "schwarz/convergence.hpp"

#include <cmath>
#include <limits>

namespace schwarz {

namespace {

InterfaceErrors accumulate(std::span<const Vector> prev,
                           std::span<const Vector> curr) {
  if (prev.size() != curr.size())
    throw std::invalid_argument("trace lists differ in length");

  double abs2 = 0.0;
  double rel2 = 0.0;
  bool degenerate = false;

  for (std::size_t i = 0; i < curr.size(); ++i) {
    if (prev[i].size() != curr[i].size())
      throw std::invalid_argument("trace layouts differ");
    if (curr[i].size() == 0) continue;  // empty traces are skipped

    const double d2 = (curr[i] - prev[i]).squaredNorm();
    const double n2 = curr[i].squaredNorm();
    abs2 += d2;
    if (n2 > 0.0) {
      rel2 += d2 / n2;
    } else if (d2 > 0.0) {
      degenerate = true;  // moving trace with zero current norm
    }
  }

  InterfaceErrors e;
  e.e_abs = std::sqrt(abs2);
  e.rel_degenerate = degenerate;
  e.e_rel = degenerate ? std::numeric_limits<double>::infinity()
                       : std::sqrt(rel2);
  return e;
}

}  // namespace

InterfaceErrors interface_errors(std::span<const Vector> prev_traces,
                                 std::span<const Vector> curr_traces) {
  return accumulate(prev_traces, curr_traces);
}

InterfaceErrors interface_errors(const InterfaceState& prev,
                                 const InterfaceState& curr) {
  if (prev.layout.slices.size() != curr.layout.slices.size() ||
      prev.values.size() != curr.values.size())
    throw std::invalid_argument("interface states differ in layout");

  std::vector<Vector> p, c;
  p.reserve(prev.layout.slices.size());
  c.reserve(curr.layout.slices.size());
  for (std::size_t i = 0; i < prev.layout.slices.size(); ++i) {
    p.push_back(prev.slice(static_cast<int>(i)));
    c.push_back(curr.slice(static_cast<int>(i)));
  }
  return accumulate(p, c);
}

bool below_tolerance(const InterfaceErrors& e, const ConvergenceCriteria& c) {
  return e.e_abs <= c.eps_abs || e.e_rel <= c.eps_rel;
}

}  // namespace schwarz
