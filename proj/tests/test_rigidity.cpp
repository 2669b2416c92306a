#include "doctest.h"
#include "flexcone/generators.hpp"
#include "flexcone/rigidity.hpp"

using namespace flexcone;

TEST_CASE("rigidity matrix shape and translations") {
  TriangulatedPolyhedron P = schonhardt();
  std::vector<Vec3> V;
  for (size_t i = 0; i < P.V.size(); ++i) V.push_back(P.v3(int(i)));
  Eigen::MatrixXd R = rigidity_matrix_euclidean(V, P.edges);
  CHECK(R.rows() == 12);
  CHECK(R.cols() == 18);
  Eigen::VectorXd q = Eigen::VectorXd::Zero(18);
  for (int i = 0; i < 6; ++i) q[3 * i] = 1.0;  // constant field
  CHECK((R * q).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("flex analysis verdicts") {
  FlexReport r = flex_analysis(schonhardt(), Ambient::euclidean);
  CHECK(r.kernel_dim == 7);
  CHECK(r.trivial_dim == 6);
  CHECK(r.flexible);
  CHECK(r.nontrivial.size() == 1);

  FlexReport rigid = flex_analysis(regular_octahedron(), Ambient::euclidean);
  CHECK(rigid.kernel_dim == 6);
  CHECK_FALSE(rigid.flexible);

  TriangulatedPolyhedron tet = build_polyhedron3(
      Model::euclidean, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
  CHECK(flex_analysis(tet, Ambient::euclidean).kernel_dim == 6);
}

TEST_CASE("explicit schonhardt flex") {
  TriangulatedPolyhedron P = schonhardt();
  FlexField q = schonhardt_flex(P);
  CHECK(rigidity_residual(P, q) < 1e-10);
  // Rotational symmetry of the three moving vectors.
  CHECK(q.q3[3].norm() == doctest::Approx(q.q3[5].norm()).epsilon(1e-12));
  CHECK(q.q3[4].norm() == doctest::Approx(q.q3[5].norm()).epsilon(1e-12));
  // Not in the Killing span: rank of {6 Killing fields, q} is 7.
  std::vector<Vec3> V;
  for (size_t i = 0; i < P.V.size(); ++i) V.push_back(P.v3(int(i)));
  auto K = killing_basis_euclidean(V);
  Eigen::MatrixXd M(18, 7);
  for (int c = 0; c < 6; ++c)
    for (int i = 0; i < 6; ++i) M.block<3, 1>(3 * i, c) = K[c][i];
  for (int i = 0; i < 6; ++i) M.block<3, 1>(3 * i, 6) = q.q3[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  CHECK(svd.singularValues()[6] > 1e-6 * svd.singularValues()[0]);
}

TEST_CASE("pogorelov velocity formula") {
  Vec3 q(1, 0, 0);
  CHECK((pogorelov_velocity(Vec3::Zero(), q) - q).norm() < 1e-15);
  CHECK((pogorelov_velocity(Vec3(0, 0.5, 0), q) - q).norm() < 1e-15);
  Vec3 v = pogorelov_velocity(Vec3(0.5, 0, 0), q);
  CHECK(v[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK_THROWS_AS(pogorelov_velocity(Vec3(1, 0, 0), q), std::domain_error);
}

TEST_CASE("minkowski flex analysis") {
  FlexReport r =
      flex_analysis(hyperbolic_schonhardt(1.0, 1.0), Ambient::minkowski);
  CHECK(r.kernel_dim == 7);
  CHECK(r.flexible);
  // Scaled-down regular octahedron inside the ball: rigid.
  TriangulatedPolyhedron oct = regular_octahedron();
  std::vector<Vec3> V;
  for (size_t i = 0; i < oct.V.size(); ++i) V.push_back(0.5 * oct.v3(int(i)));
  TriangulatedPolyhedron H =
      build_polyhedron3(Model::klein, V, oct.F, oct.coloring);
  FlexReport r2 = flex_analysis(H, Ambient::minkowski);
  CHECK(r2.kernel_dim == 6);
  CHECK_FALSE(r2.flexible);
}

TEST_CASE("angle variation") {
  TriangulatedPolyhedron P = schonhardt();
  FlexField q = schonhardt_flex(P);
  auto var = angle_variation(P, q);
  double mx = 0;
  for (double v : var) mx = std::max(mx, std::abs(v));
  CHECK(mx > 1e-3);

  FlexField neg = q;
  for (auto& v : neg.q3) v = -v;
  auto nvar = angle_variation(P, neg);
  for (size_t e = 0; e < var.size(); ++e)
    CHECK(var[e] + nvar[e] == doctest::Approx(0.0).epsilon(1e-15));

  // Killing field: rotation about z.
  FlexField rot;
  rot.ambient = Ambient::euclidean;
  for (size_t i = 0; i < P.V.size(); ++i)
    rot.q3.push_back(Vec3::UnitZ().cross(P.v3(int(i))));
  auto kvar = angle_variation(P, rot);
  for (double v : kvar) CHECK(std::abs(v) < 1e-7);
}

TEST_CASE("blaschke-liebmann") {
  BlaschkeResult r = blaschke_liebmann(schonhardt());
  CHECK(std::abs(r.det_black) < 1e-8);
  CHECK(std::abs(r.det_white) < 1e-8);
  CHECK(r.flexible);

  BlaschkeResult rigid =
      blaschke_liebmann(schonhardt({1.0, 1.0, M_PI / 2 + 0.1}));
  CHECK(std::abs(rigid.det_black) > 1e-3);
  CHECK_FALSE(rigid.flexible);

  CHECK(blaschke_liebmann(gluck_octahedron()).flexible);
  CHECK_FALSE(blaschke_liebmann(gluck_octahedron(0.1)).flexible);
}
