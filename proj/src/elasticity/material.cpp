#include "schwarz/elasticity/material.hpp"

#include <cmath>
#include <sstream>

namespace schwarz::fe {

void MaterialParams::validate() const {
  std::ostringstream bad;
  if (!(youngs_modulus > 0.0)) bad << "E must be positive; ";
  if (!(poisson_ratio > 0.0 && poisson_ratio < 0.5))
    bad << "nu must lie in (0, 0.5); ";
  if (bad.tellp() > 0)
    throw std::invalid_argument("invalid material: " + bad.str());
}

Eigen::Matrix2d piola_stress(const Eigen::Matrix2d& F,
                             const MaterialParams& mat) {
  const double J = F.determinant();
  if (!(J > 0.0)) throw InvertedElementError(J, -1);
  const Eigen::Matrix2d Finvt = F.inverse().transpose();
  return mat.lame2() * (F - Finvt) + mat.lame1() * std::log(J) * Finvt;
}

double strain_energy(const Eigen::Matrix2d& F, const MaterialParams& mat) {
  const double J = F.determinant();
  if (!(J > 0.0)) throw InvertedElementError(J, -1);
  const double logJ = std::log(J);
  const double trC = (F.transpose() * F).trace();
  return 0.5 * mat.lame2() * (trC - 2.0) - mat.lame2() * logJ +
         0.5 * mat.lame1() * logJ * logJ;
}

MaterialTangent piola_tangent(const Eigen::Matrix2d& F,
                              const MaterialParams& mat) {
  const double J = F.determinant();
  if (!(J > 0.0)) throw InvertedElementError(J, -1);
  const Eigen::Matrix2d Finvt = F.inverse().transpose();
  const double l1 = mat.lame1();
  const double l2 = mat.lame2();
  const double c = l2 - l1 * std::log(J);

  MaterialTangent t;
  for (int i = 0; i < 2; ++i)
    for (int Jd = 0; Jd < 2; ++Jd)
      for (int k = 0; k < 2; ++k)
        for (int L = 0; L < 2; ++L)
          t.a[i][Jd][k][L] = l2 * (i == k) * (Jd == L) +
                             c * Finvt(i, L) * Finvt(k, Jd) +
                             l1 * Finvt(i, Jd) * Finvt(k, L);
  return t;
}

}  // namespace schwarz::fe
