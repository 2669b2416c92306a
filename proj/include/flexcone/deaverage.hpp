#pragma once

#include "flexcone/rigidity.hpp"

namespace flexcone {

// Compact twisted octahedron with its symmetrized nontrivial flex: klein
// polyhedron, hyperboloid lifts P and lifted velocities Q normalized to
// max klein speed 1. The symmetrization averages the explicit flex with
// its pushforward under the order-two symmetry swapping the two bases,
// which makes the three edge-length classes move together.
struct SymmetricFlex {
  TriangulatedPolyhedron poly;  // klein
  std::vector<Vec4> P;
  std::vector<Vec4> Q;
};

SymmetricFlex schonhardt_symmetric_flex(double a, double b,
                                        double twist = M_PI / 2.0);

// t -> normalize(P + t Q), pointwise on the hyperboloid.
std::vector<Vec4> flex_path(const std::vector<Vec4>& P,
                            const std::vector<Vec4>& Q, double t);

std::vector<double> edge_spectrum(const std::vector<Vec4>& pts,
                                  const std::vector<Edge>& edges);

// True when some face-preserving vertex relabeling matches the full
// pairwise hyperbolic distance matrices.
bool congruent(const std::vector<Vec4>& A, const std::vector<Vec4>& B,
               const std::vector<std::array<int, 3>>& faces,
               double tol = 1e-8);

struct DeaverageResult {
  std::vector<Vec4> plus, minus;  // hyperboloid vertex sets at +t / -t
  double spectrum_gap = 0.0;      // sorted edge spectra difference
  bool congruent = false;
};

DeaverageResult deaverage(const TriangulatedPolyhedron& poly,
                          const std::vector<Vec4>& P,
                          const std::vector<Vec4>& Q, double t);

// The three dihedral classes of the twisted octahedron: base/top edges,
// convex side edges, reflex side edges.
const std::array<std::vector<std::pair<int, int>>, 3>& schonhardt_edge_classes();

// Doubled cone-angle triple of family i at parameter t for the piece with
// base data (a, b): family 1 glues the +t copy to itself, family 2 glues
// +t to -t, family 3 glues -t to itself.
Vec3 cone_angle_triple(int family, double t, double a, double b);

struct CollisionResult {
  // Family-2 double at (t1, a1, b1) ...
  double t1 = 0.0, a1 = 0.0, b1 = 0.0;
  // ... matched by the family-1 double at (t2, a2, b2).
  double t2 = 0.0, a2 = 0.0, b2 = 0.0;
  Vec3 triple1 = Vec3::Zero(), triple2 = Vec3::Zero();
  double residual = 0.0;          // max |triple1 - triple2|
  double spectrum_witness = 0.0;  // min spectra gap piece-vs-piece
  int iterations = 0;
};

// Find (t2, a2, b2) with the family-1 triple equal to the family-2 triple
// at t1 = 0.8 * eps, a1 = b1 = (lo + hi) / 2, by damped Newton iteration
// with multistarts inside [lo, hi]^2 x (0, eps].
CollisionResult collision_search(double eps = 0.05, double lo = 0.8,
                                 double hi = 1.2);

}  // namespace flexcone
