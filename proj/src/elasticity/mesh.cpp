#include "schwarz/elasticity/mesh.hpp"

#include <cstdio>
#include <fstream>

namespace schwarz::fe {

std::string to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Sigma1: return "sigma1";
    case BoundaryTag::Sigma2: return "sigma2";
    case BoundaryTag::Sigma3: return "sigma3";
    case BoundaryTag::Sigma4: return "sigma4";
    case BoundaryTag::GammaLeft: return "gamma_left";
    case BoundaryTag::GammaRight: return "gamma_right";
  }
  return "?";
}

const std::vector<int>& TriMesh::nodes_on(BoundaryTag tag) const {
  auto it = boundary_nodes.find(tag);
  if (it == boundary_nodes.end())
    throw std::invalid_argument("mesh has no boundary tagged " +
                                to_string(tag));
  return it->second;
}

void TriMesh::validate() const {
  if (nx < 1 || ny < 1) throw std::invalid_argument("degenerate mesh");
  for (const auto& t : triangles) {
    const Eigen::Vector2d e1 = nodes[t[1]] - nodes[t[0]];
    const Eigen::Vector2d e2 = nodes[t[2]] - nodes[t[0]];
    if (e1.x() * e2.y() - e1.y() * e2.x() <= 0.0)
      throw std::invalid_argument("triangle with non-positive orientation");
  }
  for (const auto& [tag, list] : boundary_nodes)
    if (list.size() < 2)
      throw std::invalid_argument("boundary " + to_string(tag) +
                                  " has fewer than two nodes");
}

TriMesh make_rect_mesh(double x0, double x1, double y0, double y1, int nx,
                       int ny, BoundaryTag left_tag, BoundaryTag right_tag) {
  TriMesh m;
  m.nx = nx;
  m.ny = ny;
  m.x0 = x0;
  m.x1 = x1;
  m.y0 = y0;
  m.y1 = y1;

  m.nodes.reserve(std::size_t(nx + 1) * std::size_t(ny + 1));
  for (int ix = 0; ix <= nx; ++ix)
    for (int iy = 0; iy <= ny; ++iy)
      m.nodes.emplace_back(x0 + (x1 - x0) * ix / double(nx),
                           y0 + (y1 - y0) * iy / double(ny));

  m.triangles.reserve(2u * std::size_t(nx) * std::size_t(ny));
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      const int a = m.node_index(ix, iy);
      const int b = m.node_index(ix + 1, iy);
      const int c = m.node_index(ix + 1, iy + 1);
      const int d = m.node_index(ix, iy + 1);
      m.triangles.push_back({a, b, c});
      m.triangles.push_back({a, c, d});
    }

  auto& left = m.boundary_nodes[left_tag];
  auto& right = m.boundary_nodes[right_tag];
  for (int iy = 0; iy <= ny; ++iy) {
    left.push_back(m.node_index(0, iy));
    right.push_back(m.node_index(nx, iy));
    if (iy < ny) {
      m.boundary_edges.push_back(
          {{m.node_index(0, iy), m.node_index(0, iy + 1)}, left_tag});
      m.boundary_edges.push_back(
          {{m.node_index(nx, iy), m.node_index(nx, iy + 1)}, right_tag});
    }
  }
  auto& bottom = m.boundary_nodes[BoundaryTag::Sigma3];
  auto& top = m.boundary_nodes[BoundaryTag::Sigma4];
  for (int ix = 0; ix <= nx; ++ix) {
    bottom.push_back(m.node_index(ix, 0));
    top.push_back(m.node_index(ix, ny));
    if (ix < nx) {
      m.boundary_edges.push_back(
          {{m.node_index(ix, 0), m.node_index(ix + 1, 0)}, BoundaryTag::Sigma3});
      m.boundary_edges.push_back(
          {{m.node_index(ix, ny), m.node_index(ix + 1, ny)}, BoundaryTag::Sigma4});
    }
  }

  m.validate();
  return m;
}

void write_mesh_text(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "nodes " << mesh.n_nodes() << "\n";
  char buf[80];
  for (const auto& p : mesh.nodes) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x(), p.y());
    out << buf;
  }
  out << "triangles " << mesh.triangles.size() << "\n";
  for (const auto& t : mesh.triangles)
    out << t[0] << " " << t[1] << " " << t[2] << "\n";
  out << "boundary_edges " << mesh.boundary_edges.size() << "\n";
  for (const auto& [e, tag] : mesh.boundary_edges)
    out << e[0] << " " << e[1] << " " << to_string(tag) << "\n";
}

void write_field_csv(const TriMesh& mesh, const Vector& u,
                     const std::string& path) {
  if (u.size() != mesh.n_dofs())
    throw std::invalid_argument("field length does not match the mesh");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x,y,ux,uy,magnitude\n";
  char buf[160];
  for (int n = 0; n < mesh.n_nodes(); ++n) {
    const double ux = u[2 * n], uy = u[2 * n + 1];
    std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e,%.12e\n",
                  mesh.nodes[std::size_t(n)].x(), mesh.nodes[std::size_t(n)].y(),
                  ux, uy, std::sqrt(ux * ux + uy * uy));
    out << buf;
  }
}

}  // namespace schwarz::fe
