#include "schwarz/least_squares.hpp"

#include <Eigen/QR>

#include <cmath>

namespace schwarz {

Vector solve_constrained_ls(const Matrix& F) {
  const Eigen::Index n = F.rows();
  const Eigen::Index cols = F.cols();
  if (n < 1 || cols < 1)
    throw std::invalid_argument("residual matrix must be non-empty");
  if (cols == 1) return Vector::Constant(1, 1.0);

  // Orthonormal basis of {z : 1^T z = 0} from the QR factorization of the
  // ones vector: columns 2..cols of Q.
  Vector ones = Vector::Ones(cols);
  Eigen::HouseholderQR<Matrix> qr(ones);
  Matrix Q = qr.householderQ();
  Matrix Z = Q.rightCols(cols - 1);

  const Vector alpha_uniform = Vector::Constant(cols, 1.0 / double(cols));
  const Matrix A = F * Z;
  const Vector b = F * alpha_uniform;

  // Minimum-norm least-squares solve; rank-deficient A (identical or zero
  // residual columns) then still yields the minimum-norm minimizer in alpha
  // because Z has orthonormal columns orthogonal to alpha_uniform. Directions
  // that only carry round-off relative to F count as rank deficient, so a
  // fully degenerate window falls back to the uniform weights instead of
  // amplifying noise.
  Vector beta = Vector::Zero(cols - 1);
  if (A.norm() > 1e-13 * std::max(1.0, F.norm())) {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
    cod.setThreshold(1e-12);
    cod.compute(A);
    beta = cod.solve(-b);
  }

  return alpha_uniform + Z * beta;
}

Vector predict_geometric_alpha(double ell_max, int m) {
  if (ell_max == 0.0)
    throw std::invalid_argument("spectral factor must be nonzero");
  if (m < 0) throw std::invalid_argument("window size must be non-negative");

  const double r = std::abs(ell_max);
  Vector w(m + 1);
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) {
    w[j] = std::pow(r, j);
    sum += w[j];
  }
  return w / sum;
}

}  // namespace schwarz
