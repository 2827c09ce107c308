#include "schwarz/types.hpp"

#include <cmath>
#include <sstream>

namespace schwarz {

Eigen::Index InterfaceLayout::total_size() const {
  Eigen::Index n = 0;
  for (const auto& s : slices) n += s.length;
  return n;
}

void InterfaceLayout::validate() const {
  if (slices.empty()) throw std::invalid_argument("interface layout is empty");
  Eigen::Index expect = 0;
  for (const auto& s : slices) {
    if (s.length <= 0)
      throw std::invalid_argument("interface slice with non-positive length");
    if (s.offset != expect)
      throw std::invalid_argument(
          "interface slices must be contiguous and ordered");
    expect += s.length;
  }
}

void InterfaceState::validate() const {
  layout.validate();
  if (layout.total_size() != values.size())
    throw std::invalid_argument(
        "interface layout does not cover the value vector");
  if (!values.allFinite())
    throw std::invalid_argument("interface state contains non-finite entries");
}

void ConvergenceCriteria::validate() const {
  std::ostringstream bad;
  if (!(eps_abs > 0)) bad << "eps_abs must be positive; ";
  if (!(eps_rel > 0)) bad << "eps_rel must be positive; ";
  if (maxit < 1) bad << "maxit must be at least 1; ";
  if (bad.tellp() > 0)
    throw std::invalid_argument("invalid convergence criteria: " + bad.str());
}

}  // namespace schwarz
