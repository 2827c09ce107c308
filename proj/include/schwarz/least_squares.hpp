#pragma once

#include "schwarz/types.hpp"

namespace schwarz {

/// Minimizer of ||F a||_2 subject to sum(a) = 1, for F of size n x (m+1)
/// whose columns are residual history entries ordered oldest first.
///
/// The constraint is eliminated through a = a_uniform + Z b with Z an
/// orthonormal basis of the hyperplane {1^T z = 0}; the reduced problem is an
/// ordinary least-squares solve. When F Z is rank deficient the minimum-norm
/// b is taken, which makes the result the minimum-norm minimizer in a as
/// well. An all-zero F therefore yields the uniform weights 1/(m+1).
Vector solve_constrained_ls(const Matrix& F);

/// Geometric weight profile a_j = |ell|^j / sum_i |ell|^i for j = 0..m.
/// Index 0 is the weight of the most recent residual column.
Vector predict_geometric_alpha(double ell_max, int m);

}  // namespace schwarz
