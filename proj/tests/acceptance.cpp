// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "flexcone/conemanifold.hpp"
#include "flexcone/deaverage.hpp"
#include "flexcone/generators.hpp"

using namespace flexcone;

namespace {

int failures = 0;

void report(int n, bool ok, const char* what) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, what);
  if (!ok) ++failures;
}

std::vector<Vec3> transferred_flex(const TriangulatedPolyhedron& src) {
  FlexField q = schonhardt_flex(src);
  std::vector<Vec3> v;
  for (size_t i = 0; i < src.V.size(); ++i)
    v.push_back(pogorelov_velocity(src.v3(int(i)), q.q3[i]));
  return v;
}

// 1. Schonhardt flexibility over the (a,b) grid plus the rigid control.
void criterion1() {
  bool ok = true;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double a = 0.5 + 1.5 * i / 4.0, b = 0.5 + 1.5 * j / 4.0;
      FlexReport r = flex_analysis(schonhardt({a, b, M_PI / 2}),
                                   Ambient::euclidean);
      ok = ok && r.kernel_dim == 7 && r.trivial_dim == 6 && r.flexible;
    }
  FlexReport c = flex_analysis(schonhardt({1, 1, M_PI / 3}), Ambient::euclidean);
  ok = ok && c.kernel_dim == 6 && !c.flexible;
  report(1, ok, "Schonhardt kernel 7 on 5x5 grid, twist pi/3 control rigid");
}

// 2. Explicit flex: residual and Killing-complement norm.
void criterion2() {
  TriangulatedPolyhedron P = schonhardt();
  FlexField q = schonhardt_flex(P);
  bool ok = rigidity_residual(P, q) < 1e-10;
  std::vector<Vec3> V;
  for (size_t i = 0; i < P.V.size(); ++i) V.push_back(P.v3(int(i)));
  auto K = killing_basis_euclidean(V);
  Eigen::MatrixXd Km(18, 6);
  Eigen::VectorXd qv(18);
  double mx = 0;
  for (const auto& v : q.q3) mx = std::max(mx, v.norm());
  for (int i = 0; i < 6; ++i) {
    for (int c = 0; c < 6; ++c) Km.block<3, 1>(3 * i, c) = K[c][i];
    qv.segment<3>(3 * i) = q.q3[i] / mx;
  }
  Eigen::VectorXd resid = qv - Km * Km.colPivHouseholderQr().solve(qv);
  ok = ok && resid.norm() > 0.1;
  report(2, ok, "explicit flex residual < 1e-10, Killing complement > 0.1");
}

// 3. Pogorelov equivalence on random placements inside the klein ball.
void criterion3() {
  std::mt19937 rng(0);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  bool ok = true;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    TriangulatedPolyhedron base =
        trial % 2 ? schonhardt({1, 1, M_PI / 2 + 0.3}) : schonhardt();
    // Random rotation (QR of a gaussian matrix) + placement in the ball.
    Eigen::Matrix3d G;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) G(r, c) = gauss(rng);
    Eigen::Matrix3d R = Eigen::HouseholderQR<Eigen::Matrix3d>(G).householderQ();
    if (R.determinant() < 0) R.col(0) = -R.col(0);
    Vec3 shift(0.2 * uni(rng), 0.2 * uni(rng), 0.2 * uni(rng));
    std::vector<Vec3> V;
    double rad = 0;
    for (size_t i = 0; i < base.V.size(); ++i) {
      V.push_back(R * base.v3(int(i)));
      rad = std::max(rad, (V.back() + shift).norm());
    }
    double scale = 0.7 / rad;
    for (auto& v : V) v = scale * (v + shift);
    TriangulatedPolyhedron E =
        build_polyhedron3(Model::euclidean, V, base.F, base.coloring);
    TriangulatedPolyhedron H =
        build_polyhedron3(Model::klein, V, base.F, base.coloring);
    FlexReport re = flex_analysis(E, Ambient::euclidean);
    FlexReport rh = flex_analysis(H, Ambient::minkowski);
    ok = ok && re.kernel_dim == rh.kernel_dim && re.flexible == rh.flexible;

    // Transfer the euclidean kernel vectors and the Killing basis.
    auto transfer = [&](const std::vector<Vec3>& q3) {
      FlexField f;
      f.ambient = Ambient::minkowski;
      for (size_t i = 0; i < V.size(); ++i) {
        Vec3 v = pogorelov_velocity(V[i], q3[i]);
        f.q4.push_back(lift_velocity_hyperboloid(V[i], v));
      }
      return f;
    };
    for (const auto& nf : re.nontrivial)
      ok = ok && rigidity_residual(H, transfer(nf.q3)) < 1e-10;

    std::vector<Vec4> pts;
    for (const auto& v : V) pts.push_back(klein_to_hyperboloid(v));
    auto KM = killing_basis_minkowski(pts);
    Eigen::MatrixXd span(4 * int(V.size()), 7);
    for (int c = 0; c < 6; ++c)
      for (size_t i = 0; i < V.size(); ++i)
        span.block<4, 1>(4 * int(i), c) = KM[c][i];
    auto KE = killing_basis_euclidean(V);
    for (int c = 0; c < 6 && ok; ++c) {
      FlexField img = transfer(KE[c]);
      ok = ok && rigidity_residual(H, img) < 1e-10;
      for (size_t i = 0; i < V.size(); ++i)
        span.block<4, 1>(4 * int(i), 6) = img.q4[i];
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(span);
      ok = ok && svd.singularValues()[6] < 1e-8 * svd.singularValues()[0];
    }
  }
  report(3, ok, "euclidean/hyperbolic kernels agree, Pogorelov images valid");
}

// 4. Blaschke-Liebmann vs flex analysis on 200 octahedra.
void criterion4() {
  std::mt19937 rng(1);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    TriangulatedPolyhedron P = trial < 100 ? random_concurrent_octahedron(rng)
                                           : random_octahedron(rng);
    BlaschkeResult b = blaschke_liebmann(P);
    FlexReport f = flex_analysis(P, Ambient::euclidean);
    ok = ok && b.flexible == f.flexible;
    ok = ok && ((std::abs(b.det_black) < 1e-8) == (std::abs(b.det_white) < 1e-8));
  }
  report(4, ok, "BL verdict matches flex analysis 200/200, black iff white");
}

// 5. Truncation validity.
void criterion5() {
  TruncatedHyperidealPolyhedron T = truncate(hyperideal_schonhardt());
  TruncatedMetrics m = truncated_metrics(T);
  bool ok = m.max_new_edge_dihedral_dev < 1e-9 && m.max_length_mismatch < 1e-9;
  ok = ok && T.n_vertices() == 24 && T.n_edges() == 36 && T.n_faces() == 14;
  report(5, ok, "truncation: right angles, dual length identity, 24/36/14");
}

// 6. Truncated flexibility.
void criterion6() {
  FlexReport f = truncated_flex_analysis(truncate(hyperideal_schonhardt()));
  bool ok = f.flexible && f.kernel_dim == 7;
  FlexReport r = truncated_flex_analysis(
      truncate(hyperideal_scale(regular_octahedron(), 0.95)));
  ok = ok && !r.flexible;
  report(6, ok, "truncated Schonhardt flexible (kernel 7), regular rigid");
}

// 7. Gluing schemas.
void criterion7() {
  auto T = std::make_shared<const TruncatedHyperidealPolyhedron>(
      truncate(hyperideal_schonhardt()));
  ConeManifold dd = assemble(builtin_schema("double_of_double", nullptr, T));
  bool ok = dd.components.size() == 12;
  for (const auto& c : dd.components) {
    ok = ok && c.is_circle;
    ok = ok && std::abs(c.cone_angle -
                        2.0 * T->old_edge_dihedral(c.arcs[0].second)) < 1e-12;
  }
  ConeManifold m3 = assemble(builtin_schema("three_comp", nullptr, T));
  ConeManifold m4 = assemble(builtin_schema("four_comp", nullptr, T));
  ok = ok && m3.components.size() == 3 && !m3.orientable;
  ok = ok && m4.components.size() == 4 && m4.orientable;
  for (const ConeManifold* M : {&m3, &m4}) {
    int reflex = 0;
    for (const auto& c : M->components) reflex += c.cone_angle > 2 * M_PI;
    ok = ok && reflex == 1;
  }
  report(7, ok, "12 circles / 3 non-orientable / 4 orientable, one > 2pi");
}

// 8. Cone-manifold flexibility with sign-flip controls.
void criterion8() {
  bool ok = true;
  auto P = std::make_shared<const TriangulatedPolyhedron>(
      hyperbolic_schonhardt(1.0, 1.0));
  auto T = std::make_shared<const TruncatedHyperidealPolyhedron>(
      truncate(hyperideal_schonhardt()));
  std::vector<GluingSchema> schemas = {
      builtin_schema("double", P, nullptr),
      builtin_schema("double_of_double", nullptr, T),
      builtin_schema("three_comp", nullptr, T),
      builtin_schema("four_comp", nullptr, T)};
  for (const auto& s : schemas) {
    const TriangulatedPolyhedron& src = s.trunc ? s.trunc->source : *s.poly;
    auto v = transferred_flex(src);
    ManifoldFlexReport r = manifold_flex_check(s, v);
    ok = ok && r.max_component_variation < 1e-6 && r.witness > 1e-3;
    for (int p = 0; p < s.npieces; ++p) {
      GluingSchema bad = s;
      bad.flex_sign[p] = -bad.flex_sign[p];
      ok = ok && manifold_flex_check(bad, v).max_component_variation > 1e-3;
    }
  }
  report(8, ok, "angle variations < 1e-6 with witness; sign flips fail");
}

// 9. Ideal octahedron angles.
void criterion9() {
  auto cl = ideal_twisted_octahedron_angles({1e3});
  std::array<double, 4> lim = {M_PI / 6, M_PI / 3, M_PI / 3, 7 * M_PI / 6};
  bool ok = true;
  for (int i = 0; i < 4; ++i) {
    ok = ok && std::abs(cl[i] - lim[i]) < 1e-2;
    ok = ok && cl[i] > M_PI / 7;
  }
  report(9, ok, "ideal angles near (pi/6, pi/3, pi/3, 7pi/6), all > pi/7");
}

// 10. Branched cover chain.
void criterion10() {
  MeridianSystem sys = prism_meridian_system();
  auto start = std::chrono::steady_clock::now();
  auto found = meridian_cover_search(sys, 7);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::vector<int> known = {1, 1, 2, 1};
  bool ok = std::find(found.begin(), found.end(), known) != found.end();
  for (const auto& w : sys.words) {
    int v = 0;
    for (auto [g, e] : w) v += e * known[g];
    v = ((v % 7) + 7) % 7;
    ok = ok && v >= 1 && v <= 6;
  }
  ok = ok && secs < 1.0;

  auto T = std::make_shared<const TruncatedHyperidealPolyhedron>(
      truncate(hyperideal_schonhardt({1.0, 3.0, M_PI / 2}, 0.999)));
  ConeManifold D = assemble(builtin_schema("double", nullptr, T));
  std::vector<int> branched;
  for (size_t i = 0; i < D.components.size(); ++i) {
    ok = ok && D.components[i].cone_angle > 2 * M_PI / 7;
    if (D.components[i].cone_angle < 2 * M_PI) branched.push_back(int(i));
  }
  LiftResult lr = lift_cone_angles(D, branched, 7);
  for (const auto& c : lr.components) ok = ok && c.cone_angle > 2 * M_PI;
  report(10, ok, "cover (1,1,2,1) found < 1s; lifted ledger all > 2pi");
}

// 11. Deaveraging.
void criterion11() {
  SymmetricFlex sf = schonhardt_symmetric_flex(1.0, 1.0);
  bool ok = true;
  for (double t : {0.001, 0.01}) {
    DeaverageResult r = deaverage(sf.poly, sf.P, sf.Q, t);
    ok = ok && r.spectrum_gap < 1e-12 && !r.congruent;
    // Some dihedral differs at first order under the identity labeling.
    TriangulatedPolyhedron Pp =
        build_polyhedron(Model::hyperboloid, r.plus, sf.poly.F);
    TriangulatedPolyhedron Pm =
        build_polyhedron(Model::hyperboloid, r.minus, sf.poly.F);
    double dmax = 0;
    for (size_t e = 0; e < Pp.edges.size(); ++e)
      dmax = std::max(dmax, std::abs(dihedral_angle(Pp, int(e)) -
                                     dihedral_angle(Pm, int(e))));
    ok = ok && dmax > 1e-5;
  }
  auto K = killing_basis_minkowski(sf.P);
  DeaverageResult kr = deaverage(sf.poly, sf.P, K[4], 0.01);
  ok = ok && kr.congruent;
  report(11, ok, "spectra even to 1e-12; flex non-congruent, Killing congruent");
}

// 12. Equal-cone-angle collision.
void criterion12() {
  auto start = std::chrono::steady_clock::now();
  CollisionResult r = collision_search(0.05, 0.8, 1.2);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  bool ok = r.residual < 1e-8 && r.spectrum_witness > 1e-6 && secs < 300.0;
  report(12, ok, "collision: triples within 1e-8, spectra differ, < 5 min");
}

// 13. Tube distance.
void criterion13() {
  TubeResult r = min_tube_distance(truncate(hyperideal_schonhardt()));
  bool ok = r.distance <= std::atanh(1.0 / std::sqrt(3.0)) + 1e-9;
  report(13, ok, "min tube distance within arctanh(1/sqrt(3))");
  std::printf("      attained %.6f at edges (%d,%d), (%d,%d)\n", r.distance,
              r.edge1.first, r.edge1.second, r.edge2.first, r.edge2.second);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  return failures == 0 ? 0 : 1;
}
