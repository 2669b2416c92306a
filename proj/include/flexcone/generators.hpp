#pragma once

#include <array>
#include <random>

#include "flexcone/rigidity.hpp"

namespace flexcone {

struct SchonhardtParams {
  double a = 1.0;      // base edge length
  double b = 1.0;      // distance between base planes
  double twist = M_PI / 2.0;
};

// Twisted octahedron ABC A'B'C' (vertices 0..5), canonical coloring
// black = {ABC', A'BC, AB'C, A'B'C'}.
TriangulatedPolyhedron schonhardt(const SchonhardtParams& p = {});

// The explicit flex: q(A)=q(B)=q(C)=0, q(C') normal to plane ABC',
// q(A'), q(B') its rotations by 2pi/3 and 4pi/3 about the axis.
FlexField schonhardt_flex(const TriangulatedPolyhedron& P);

// Pyramid over a planar quadrilateral ABCD with apex E and the base
// subdivided by F = AC x BD; flexible when ABCD is coplanar, which the
// construction enforces up to `perturb` applied to D along the normal.
TriangulatedPolyhedron gluck_octahedron(double perturb = 0.0);

// Antiprism over regular n-gons; `twisted` adds the extra pi/2 rotation.
TriangulatedPolyhedron twisted_antiprism(int n, double a = 1.0, double b = 1.0,
                                         bool twisted = true);

struct IdealOctahedronParams {
  double ratio = 1e3;  // outer/inner triangle circumradius, > 1
};

// Four dihedral-angle classes of the ideal twisted octahedron (the four
// angles meeting at any ideal vertex, sorted ascending).
std::array<double, 4> ideal_twisted_octahedron_angles(
    const IdealOctahedronParams& p);

// Schonhardt vertices scaled to klein radius 1/shrink (> 1), every edge
// still crossing the open unit ball.
TriangulatedPolyhedron hyperideal_schonhardt(const SchonhardtParams& p = {},
                                             double shrink = 0.95);

// Klein-exterior scaling of an arbitrary origin-centered polyhedron.
TriangulatedPolyhedron hyperideal_scale(const TriangulatedPolyhedron& P,
                                        double shrink);

// Compact symmetric twisted octahedron in the klein ball with hyperbolic
// base edge length a and hyperbolic distance b between the base planes.
TriangulatedPolyhedron hyperbolic_schonhardt(double a, double b,
                                             double twist = M_PI / 2.0);

// Octahedron whose four black faces pass through a common random point.
TriangulatedPolyhedron random_concurrent_octahedron(std::mt19937& rng);
// Generic octahedron on the same combinatorics.
TriangulatedPolyhedron random_octahedron(std::mt19937& rng);

// Regular octahedron (radius 1, euclidean).
TriangulatedPolyhedron regular_octahedron();

}  // namespace flexcone
