#pragma once

#include <map>

#include "flexcone/rigidity.hpp"

namespace flexcone {

struct TruncatedHyperidealPolyhedron {
  TriangulatedPolyhedron source;  // klein, all vertices outside the ball
  std::vector<Vec4> ds;           // de Sitter lift per source vertex
  std::vector<Vec4> tv;           // truncation vertices p_ij (hyperboloid)
  std::vector<std::pair<int, int>> tv_pair;        // tv index -> (i,j)
  std::map<std::pair<int, int>, int> tv_id;        // (i,j) -> tv index
  std::vector<std::vector<int>> hexes;  // per source face, 6 tv ids, oriented
  std::vector<std::vector<int>> quads;  // per source vertex, oriented cycle

  int n_vertices() const { return int(tv.size()); }
  int n_edges() const { return int(source.edges.size() + tv.size()); }
  int n_faces() const { return int(hexes.size() + quads.size()); }
  double old_edge_length(int e) const;  // dist(p_ij, p_ji)
  double old_edge_dihedral(int e) const;
};

TruncatedHyperidealPolyhedron truncate(const TriangulatedPolyhedron& P);

struct TruncatedMetrics {
  std::vector<double> old_length_direct;   // dist(p_ij, p_ji)
  std::vector<double> old_length_dual;     // arccosh(-<p_i, p_j>)
  std::vector<double> old_dihedral;
  std::vector<double> new_edge_lengths;    // indexed like tv (edge tv->next)
  double max_new_edge_dihedral_dev = 0.0;  // from pi/2
  double max_hexagon_angle_dev = 0.0;      // from pi/2
  double max_length_mismatch = 0.0;
};

TruncatedMetrics truncated_metrics(const TruncatedHyperidealPolyhedron& T);

FlexReport truncated_flex_analysis(const TruncatedHyperidealPolyhedron& T,
                                   double tol = 1e-9);

struct TubeResult {
  double distance = 0.0;
  std::pair<int, int> edge1, edge2;  // source vertex pairs
};

// Minimum over pairs of distinct old edges of the segment-segment distance.
TubeResult min_tube_distance(const TruncatedHyperidealPolyhedron& T);

// Right-angled hexagon relation: new side opposite an old side of length
// la, with the other old sides lb, lc.
double hexagon_new_length(double la, double lb, double lc);
// Smallest singular value of the finite-difference Jacobian of the map
// (old lengths) -> (new lengths) for one hexagon.
double hexagon_jacobian_min_sv(const TruncatedHyperidealPolyhedron& T,
                               int face, double h = 1e-6);

}  // namespace flexcone
