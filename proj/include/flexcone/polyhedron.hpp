#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flexcone/geom.hpp"

namespace flexcone {

struct Edge {
  int a = 0, b = 0;     // a < b
  int f_ab = -1;        // face containing the directed edge a->b
  int f_ba = -1;        // face containing b->a
};

struct Coloring {
  std::vector<int> black, white;  // face indices
};

struct TriangulatedPolyhedron {
  Model model = Model::euclidean;
  // 3-coordinate models keep coordinate 3 at zero.
  std::vector<Vec4> V;
  std::vector<std::array<int, 3>> F;
  std::optional<Coloring> coloring;
  std::vector<Edge> edges;  // derived, sorted by (a,b)

  Vec3 v3(int i) const { return V[i].head<3>(); }
  int euler() const {
    return int(V.size()) - int(edges.size()) + int(F.size());
  }
  int edge_index(int a, int b) const;  // unordered lookup, -1 if absent
  // Hyperboloid lift of vertex i (klein interior or hyperboloid model).
  Vec4 lift(int i) const;
  double edge_length(int e) const;  // ambient metric of the model
};

TriangulatedPolyhedron build_polyhedron(
    Model model, std::vector<Vec4> vertices,
    std::vector<std::array<int, 3>> faces,
    std::optional<Coloring> coloring = std::nullopt);
TriangulatedPolyhedron build_polyhedron3(
    Model model, const std::vector<Vec3>& vertices,
    std::vector<std::array<int, 3>> faces,
    std::optional<Coloring> coloring = std::nullopt);

// Interior dihedral angle in (0, 2pi); reflex edges give values > pi.
// Euclidean model: Euclidean angle. Klein/hyperboloid: hyperbolic angle.
double dihedral_angle(const TriangulatedPolyhedron& P, int edge_index);

// Dihedral angle at the edge x--y of the wedge whose two faces run toward
// k1 and k2 respectively (all hyperboloid points); shared by the truncated
// polyhedron code.
double hyp_dihedral(const Vec4& x_a, const Vec4& x_b, const Vec4& y1,
                    const Vec4& y2);
// Hyperbolic interior angle at corner x between directions toward y1, y2.
double hyp_corner_angle(const Vec4& x, const Vec4& y1, const Vec4& y2);

Plane face_plane(const TriangulatedPolyhedron& P, int face);

}  // namespace flexcone
