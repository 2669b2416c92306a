#pragma once

#include <vector>

#include "flexcone/polyhedron.hpp"

namespace flexcone {

enum class Ambient { euclidean, minkowski };

struct FlexField {
  Ambient ambient = Ambient::euclidean;
  std::vector<Vec3> q3;  // euclidean velocities
  std::vector<Vec4> q4;  // tangent vectors at quadric points
};

struct FlexReport {
  std::vector<double> sigma;  // singular values, descending
  int kernel_dim = 0;
  int trivial_dim = 0;
  bool flexible = false;
  std::vector<FlexField> nontrivial;  // Killing-orthogonal kernel basis
};

// Rows indexed like P.edges; 3 columns per vertex.
Eigen::MatrixXd rigidity_matrix_euclidean(
    const std::vector<Vec3>& V, const std::vector<Edge>& edges);
// Tangent-basis parametrization: 3 columns per vertex, coordinates in the
// rows of tangent_basis(P_i).
Eigen::MatrixXd rigidity_matrix_minkowski(
    const std::vector<Vec4>& P, const std::vector<Edge>& edges,
    const std::vector<Eigen::Matrix<double, 3, 4>>& tb);

// Quadric points for a polyhedron analyzed in the Minkowski ambient:
// klein-interior vertices lift to the hyperboloid, exterior ones to
// de Sitter space; hyperboloid-model vertices pass through.
std::vector<Vec4> minkowski_points(const TriangulatedPolyhedron& P);

FlexReport flex_analysis(const TriangulatedPolyhedron& P, Ambient ambient,
                         double tol = 1e-9);
// Core driver on an explicit Minkowski point set + edge list.
FlexReport flex_analysis_minkowski(const std::vector<Vec4>& pts,
                                   const std::vector<Edge>& edges,
                                   double tol = 1e-9);

double rigidity_residual(const TriangulatedPolyhedron& P,
                         const FlexField& q);

// Pogorelov transfer: v = q - (p.q) p in klein coordinates.
Vec3 pogorelov_velocity(const Vec3& p, const Vec3& q);
// Velocity of the lift of the klein path t -> p + t v.
Vec4 lift_velocity_hyperboloid(const Vec3& p, const Vec3& v);
Vec4 lift_velocity_desitter(const Vec3& p, const Vec3& v);

// Central finite difference of every dihedral angle along the flex.
std::vector<double> angle_variation(const TriangulatedPolyhedron& P,
                                    const FlexField& q, double h = 1e-5);

struct BlaschkeResult {
  double det_black = 0.0;
  double det_white = 0.0;
  bool flexible = false;
};

BlaschkeResult blaschke_liebmann(const TriangulatedPolyhedron& P,
                                 double tol = 1e-8);

}  // namespace flexcone
