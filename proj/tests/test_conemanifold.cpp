#include <algorithm>

#include "doctest.h"
#include "flexcone/conemanifold.hpp"
#include "flexcone/generators.hpp"

using namespace flexcone;

namespace {

std::shared_ptr<const TruncatedHyperidealPolyhedron> standard_trunc() {
  static auto T = std::make_shared<const TruncatedHyperidealPolyhedron>(
      truncate(hyperideal_schonhardt()));
  return T;
}

std::shared_ptr<const TriangulatedPolyhedron> compact_piece() {
  static auto P = std::make_shared<const TriangulatedPolyhedron>(
      hyperbolic_schonhardt(1.0, 1.0));
  return P;
}

std::vector<Vec3> transferred_flex(const TriangulatedPolyhedron& src) {
  FlexField q = schonhardt_flex(src);
  std::vector<Vec3> v;
  for (size_t i = 0; i < src.V.size(); ++i)
    v.push_back(pogorelov_velocity(src.v3(int(i)), q.q3[i]));
  return v;
}

}  // namespace

TEST_CASE("double of a compact polyhedron") {
  auto P = compact_piece();
  GluingSchema s = builtin_schema("double", P, nullptr);
  CHECK(s.pairings.size() == 8);
  ConeManifold M = assemble(s);
  CHECK(M.components.size() == 12);
  CHECK(M.orientable);
  CHECK_FALSE(M.has_boundary);
  for (const auto& c : M.components) {
    REQUIRE(c.arcs.size() == 2);
    int e = c.arcs[0].second;
    CHECK(c.cone_angle ==
          doctest::Approx(2.0 * dihedral_angle(*P, e)).epsilon(1e-12));
    CHECK(c.length == doctest::Approx(P->edge_length(e)).epsilon(1e-12));
  }
}

TEST_CASE("double of the truncated piece has boundary") {
  GluingSchema s = builtin_schema("double", nullptr, standard_trunc());
  ConeManifold M = assemble(s);
  CHECK(M.components.size() == 12);
  CHECK(M.has_boundary);
  std::vector<double> ang;
  for (const auto& c : M.components) ang.push_back(c.cone_angle);
  std::sort(ang.begin(), ang.end());
  CHECK(ang.front() == doctest::Approx(0.651135).epsilon(1e-4));
  CHECK(ang.back() == doctest::Approx(7.840197).epsilon(1e-4));
}

TEST_CASE("double of double") {
  auto T = standard_trunc();
  GluingSchema s = builtin_schema("double_of_double", nullptr, T);
  ConeManifold M = assemble(s);
  CHECK(M.components.size() == 12);
  CHECK(M.orientable);
  CHECK_FALSE(M.has_boundary);
  for (const auto& c : M.components) {
    CHECK(c.is_circle);
    CHECK(c.arcs.size() == 4);
    int e = c.arcs[0].second;
    CHECK(c.cone_angle ==
          doctest::Approx(2.0 * T->old_edge_dihedral(e)).epsilon(1e-12));
  }
}

TEST_CASE("three and four component gluings") {
  auto T = standard_trunc();
  GluingSchema s3 = builtin_schema("three_comp", nullptr, T);
  ConeManifold M3 = assemble(s3);
  CHECK(M3.components.size() == 3);
  CHECK_FALSE(M3.orientable);
  CHECK_FALSE(M3.has_boundary);
  for (const auto& c : M3.components) CHECK(c.is_circle);
  std::vector<double> ang;
  for (const auto& c : M3.components) ang.push_back(c.cone_angle);
  std::sort(ang.begin(), ang.end());
  CHECK(ang[0] == doctest::Approx(0.651135).epsilon(1e-4));
  CHECK(ang[1] == doctest::Approx(1.916182).epsilon(1e-4));
  CHECK(ang[2] == doctest::Approx(7.840197).epsilon(1e-4));

  GluingSchema s4 = builtin_schema("four_comp", nullptr, T);
  ConeManifold M4 = assemble(s4);
  CHECK(M4.components.size() == 4);
  CHECK(M4.orientable);
  CHECK_FALSE(M4.has_boundary);

  for (const ConeManifold* M : {&M3, &M4}) {
    int reflex = 0;
    for (const auto& c : M->components) reflex += c.cone_angle > 2 * M_PI;
    CHECK(reflex == 1);
  }
}

TEST_CASE("manifold flex check") {
  auto P = compact_piece();
  GluingSchema s = builtin_schema("double", P, nullptr);
  auto v = transferred_flex(*P);
  ManifoldFlexReport r = manifold_flex_check(s, v);
  CHECK(r.max_component_variation < 1e-6);
  CHECK(r.max_length_variation < 1e-6);
  CHECK(r.witness > 1e-3);

  // Wrong signs break the cancellation.
  GluingSchema bad = s;
  bad.flex_sign = {+1, +1};
  CHECK(manifold_flex_check(bad, v).max_component_variation > 1e-3);

  // Killing field: everything is first-order constant and no witness.
  std::vector<Vec3> rot;
  for (size_t i = 0; i < P->V.size(); ++i)
    rot.push_back(Vec3::UnitZ().cross(P->v3(int(i))));
  ManifoldFlexReport kr = manifold_flex_check(s, rot);
  CHECK(kr.max_component_variation < 1e-7);
  CHECK(kr.witness < 1e-7);
}

TEST_CASE("manifold flex check on truncated gluings") {
  auto T = standard_trunc();
  auto v = transferred_flex(T->source);
  for (const char* name : {"double_of_double", "three_comp", "four_comp"}) {
    GluingSchema s = builtin_schema(name, nullptr, T);
    ManifoldFlexReport r = manifold_flex_check(s, v);
    CHECK(r.max_component_variation < 1e-6);
    CHECK(r.witness > 1e-3);
    GluingSchema bad = s;
    bad.flex_sign[0] = -bad.flex_sign[0];
    CHECK(manifold_flex_check(bad, v).max_component_variation > 1e-3);
  }
}

TEST_CASE("meridian system and cover search") {
  MeridianSystem sys = prism_meridian_system();
  CHECK(sys.generators.size() == 4);
  CHECK(sys.words.size() == 9);
  for (size_t w = 4; w < sys.words.size(); ++w)
    CHECK(sys.words[w].size() == 2);

  auto found = meridian_cover_search(sys, 7);
  std::vector<int> known = {1, 1, 2, 1};
  CHECK(std::find(found.begin(), found.end(), known) != found.end());
  // Images of all nine meridians under the known assignment are in {1,2,3}.
  for (const auto& w : sys.words) {
    int v = 0;
    for (auto [g, e] : w) v += e * known[g];
    v = ((v % 7) + 7) % 7;
    CHECK(v >= 1);
    CHECK(v <= 3);
  }

  MeridianSystem single;
  single.generators = {"a1"};
  single.words = {{{0, 1}}};
  single.word_names = {"a1"};
  CHECK(meridian_cover_search(single, 2) ==
        std::vector<std::vector<int>>{{1}});

  MeridianSystem blocked;
  blocked.generators = {"a1", "a2"};
  blocked.words = {{{0, 1}}, {{0, -1}, {1, 1}}, {{1, 1}}};
  blocked.word_names = {"a1", "a1^-1*a2", "a2"};
  CHECK(meridian_cover_search(blocked, 2).empty());
}

TEST_CASE("lift bookkeeping") {
  ConeManifold M;
  M.components.resize(2);
  M.components[0].cone_angle = 3 * M_PI;
  M.components[1].cone_angle = M_PI;
  CHECK_THROWS(lift_cone_angles(M, {0}, 1));
  LiftResult r = lift_cone_angles(M, {0}, 2);
  CHECK(r.components[0].cone_angle == doctest::Approx(6 * M_PI));
  CHECK(r.components[0].branched);
  CHECK(r.components[1].cone_angle == doctest::Approx(M_PI));
  CHECK(r.components[1].multiplicity == 2);
  CHECK(r.flexibility_inherited);
}
