#pragma once

#include "schwarz/types.hpp"

namespace schwarz::fe {

/// Compressible Neohookean material,
///   P(F) = lame2 (F - F^{-T}) + lame1 log(det F) F^{-T}.
struct MaterialParams {
  double youngs_modulus = 1440.0;  // Pa
  double poisson_ratio = 0.25;

  double lame1() const {
    return youngs_modulus * poisson_ratio /
           ((1.0 + poisson_ratio) * (1.0 - 2.0 * poisson_ratio));
  }
  double lame2() const { return youngs_modulus / (2.0 * (1.0 + poisson_ratio)); }

  void validate() const;
};

/// Thrown when a deformation gradient stops being orientation preserving.
class InvertedElementError : public std::runtime_error {
 public:
  InvertedElementError(double det, int element)
      : std::runtime_error("inverted element (det F = " +
                           std::to_string(det) + ")"),
        det(det),
        element(element) {}
  double det;
  int element;
};

/// First Piola-Kirchhoff stress. Requires det(F) > 0.
Eigen::Matrix2d piola_stress(const Eigen::Matrix2d& F_grad,
                             const MaterialParams& mat);

/// Strain energy density whose gradient in F is piola_stress. Test oracle.
double strain_energy(const Eigen::Matrix2d& F_grad, const MaterialParams& mat);

/// Material tangent A[i][J][k][L] = dP_iJ / dF_kL.
struct MaterialTangent {
  double a[2][2][2][2];
};
MaterialTangent piola_tangent(const Eigen::Matrix2d& F_grad,
                              const MaterialParams& mat);

}  // namespace schwarz::fe
