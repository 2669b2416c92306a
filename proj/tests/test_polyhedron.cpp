#include "doctest.h"
#include "flexcone/generators.hpp"
#include "flexcone/polyhedron.hpp"

using namespace flexcone;

TEST_CASE("build and validate") {
  TriangulatedPolyhedron oct = regular_octahedron();
  CHECK(oct.V.size() == 6);
  CHECK(oct.edges.size() == 12);
  CHECK(oct.euler() == 2);

  std::vector<Vec3> tet = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  TriangulatedPolyhedron T = build_polyhedron3(
      Model::euclidean, tet, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
  CHECK(T.edges.size() == 6);
  CHECK(T.euler() == 2);

  // One face flipped -> inconsistent orientation.
  CHECK_THROWS(build_polyhedron3(
      Model::euclidean, tet, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}}));
}

TEST_CASE("regular octahedron dihedral") {
  TriangulatedPolyhedron oct = regular_octahedron();
  double want = std::acos(-1.0 / 3.0);  // 1.91063...
  for (size_t e = 0; e < oct.edges.size(); ++e)
    CHECK(dihedral_angle(oct, int(e)) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("schonhardt reflex edges") {
  TriangulatedPolyhedron P = schonhardt();
  std::vector<std::pair<int, int>> reflex = {{0, 4}, {1, 5}, {2, 3}};
  for (size_t e = 0; e < P.edges.size(); ++e) {
    std::pair<int, int> key{P.edges[e].a, P.edges[e].b};
    bool is_reflex =
        std::find(reflex.begin(), reflex.end(), key) != reflex.end();
    double th = dihedral_angle(P, int(e));
    if (is_reflex)
      CHECK(th > M_PI);
    else
      CHECK(th < M_PI);
  }
}

TEST_CASE("dihedral is isometry invariant") {
  TriangulatedPolyhedron P = schonhardt();
  Eigen::Matrix3d R =
      (Eigen::AngleAxisd(0.7, Vec3(1, 2, 2).normalized())).toRotationMatrix();
  std::vector<Vec3> W;
  for (size_t i = 0; i < P.V.size(); ++i)
    W.push_back(R * P.v3(int(i)) + Vec3(0.3, -0.1, 0.2));
  TriangulatedPolyhedron Q =
      build_polyhedron3(Model::euclidean, W, P.F, P.coloring);
  for (size_t e = 0; e < P.edges.size(); ++e)
    CHECK(dihedral_angle(P, int(e)) ==
          doctest::Approx(dihedral_angle(Q, int(e))).epsilon(1e-10));
}

TEST_CASE("face planes") {
  TriangulatedPolyhedron T = build_polyhedron3(
      Model::euclidean, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
      {{0, 1, 2}, {1, 0, 3}, {2, 1, 3}, {0, 2, 3}});
  Plane pl = face_plane(T, 0);
  Vec3 n = Vec3(1, 1, 1).normalized();
  CHECK((pl.n - n).norm() < 1e-12);
  CHECK(pl.b == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("plane ABC' passes through the centroid of A'B'C'") {
  TriangulatedPolyhedron P = schonhardt();
  Plane pl = face_plane(P, 2);  // face (0,1,5) = ABC'
  Vec3 c = (P.v3(3) + P.v3(4) + P.v3(5)) / 3.0;
  CHECK(std::abs(pl.n.dot(c) - pl.b) < 1e-12);
}

TEST_CASE("hyperbolic dihedral in klein model") {
  // Compact twisted octahedron: same reflex pattern as the euclidean one.
  TriangulatedPolyhedron P = hyperbolic_schonhardt(1.0, 1.0);
  int e = P.edge_index(0, 4);
  REQUIRE(e >= 0);
  CHECK(dihedral_angle(P, e) > M_PI);
  int e2 = P.edge_index(0, 1);
  CHECK(dihedral_angle(P, e2) < M_PI);
}
