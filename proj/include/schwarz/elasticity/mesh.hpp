#pragma once

#include "schwarz/types.hpp"

#include <array>
#include <map>
#include <string>

namespace schwarz::fe {

/// Boundary naming of the rectangular bar: Sigma1 = left end, Sigma2 = right
/// end, Sigma3 = bottom, Sigma4 = top; Gamma tags mark coupling interfaces.
enum class BoundaryTag { Sigma1, Sigma2, Sigma3, Sigma4, GammaLeft, GammaRight };

std::string to_string(BoundaryTag tag);

/// Structured triangulation of a rectangle. Node (ix, iy) has index
/// ix*(ny+1) + iy, so vertical boundary node lists come out ordered by y.
/// Displacement vectors are interleaved, (ux_0, uy_0, ux_1, uy_1, ...).
struct TriMesh {
  std::vector<Eigen::Vector2d> nodes;
  std::vector<std::array<int, 3>> triangles;  // positively oriented
  std::map<BoundaryTag, std::vector<int>> boundary_nodes;
  std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary_edges;

  int nx = 0, ny = 0;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  int n_dofs() const { return 2 * n_nodes(); }
  int node_index(int ix, int iy) const { return ix * (ny + 1) + iy; }

  const std::vector<int>& nodes_on(BoundaryTag tag) const;

  void validate() const;
};

TriMesh make_rect_mesh(double x0, double x1, double y0, double y1, int nx,
                       int ny, BoundaryTag left_tag, BoundaryTag right_tag);

/// Plain-text dump: node table, triangle table, tagged boundary-edge table.
void write_mesh_text(const TriMesh& mesh, const std::string& path);

/// Long-format CSV (x, y, ux, uy, magnitude) for plotting.
void write_field_csv(const TriMesh& mesh, const Vector& u,
                     const std::string& path);

}  // namespace schwarz::fe
