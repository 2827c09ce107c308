#pragma once

#include "schwarz/elasticity/subdomain.hpp"

namespace schwarz::fe {

/// Single-domain reference solve of the stretched bar on [x0, x1] x [0, 1]:
/// u_x = 0 on the left end, u_x = pull on the right end, u_y = 0 at the
/// bottom, traction-free top.
Vector solve_monolithic(const TriMesh& mesh, const MaterialParams& mat,
                        double pull, const NewtonOptions& opts);

/// Maximum nodal displacement-magnitude difference between two fields on the
/// same mesh layout.
double e_max(const Vector& u_a, const Vector& u_b);

}  // namespace schwarz::fe
