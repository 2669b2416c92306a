#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "flexcone/generators.hpp"
#include "flexcone/json_io.hpp"

using namespace flexcone;

TEST_CASE("polyhedron round trip") {
  TriangulatedPolyhedron P = schonhardt();
  TriangulatedPolyhedron Q = polyhedron_from_json(to_json(P));
  CHECK(Q.model == P.model);
  CHECK(Q.F == P.F);
  REQUIRE(Q.coloring.has_value());
  CHECK(Q.coloring->black == P.coloring->black);
  for (size_t i = 0; i < P.V.size(); ++i)
    CHECK((Q.V[i] - P.V[i]).norm() < 1e-15);
}

TEST_CASE("malformed input diagnostics") {
  json j = to_json(schonhardt());
  j["faces"][3] = {0, 1};
  CHECK_THROWS_WITH_AS(polyhedron_from_json(j), "face 3 is not a triangle",
                       std::invalid_argument);
  json k = to_json(schonhardt());
  k["vertices"][2] = {0.0, 1.0};
  CHECK_THROWS_AS(polyhedron_from_json(k), std::invalid_argument);
}

TEST_CASE("flex report json") {
  json j = to_json(flex_analysis(schonhardt(), Ambient::euclidean));
  CHECK(j["verdict"] == "flexible");
  CHECK(j["kernel_dim"] == 7);
  CHECK(j["singular_values"].size() == 12);
  CHECK(j["flex_basis"].size() == 1);
}

TEST_CASE("truncated polyhedron json") {
  json j = to_json(truncate(hyperideal_schonhardt()));
  CHECK(j["vertices"].size() == 24);
  CHECK(j["old_faces"].size() == 8);
  CHECK(j["new_faces"].size() == 6);
  CHECK(j["old_edges"].size() == 12);
  for (const auto& v : j["vertices"]) CHECK(v.size() == 4);
}

TEST_CASE("schema file round trip") {
  auto T = std::make_shared<const TruncatedHyperidealPolyhedron>(
      truncate(hyperideal_schonhardt()));
  GluingSchema s = builtin_schema("three_comp", nullptr, T);
  ConeManifold M = assemble(s);

  std::string dir = std::tmpnam(nullptr);
  std::filesystem::create_directories(dir);
  save_json(to_json(T->source), dir + "/piece.json");
  save_json(to_json(s, "piece.json"), dir + "/schema.json");

  GluingSchema loaded = schema_from_json(load_json(dir + "/schema.json"), dir);
  ConeManifold M2 = assemble(loaded);
  REQUIRE(M2.components.size() == M.components.size());
  for (size_t c = 0; c < M.components.size(); ++c)
    CHECK(M2.components[c].cone_angle ==
          doctest::Approx(M.components[c].cone_angle).epsilon(1e-12));
  CHECK(M2.orientable == M.orientable);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cone manifold json") {
  auto P = std::make_shared<const TriangulatedPolyhedron>(
      hyperbolic_schonhardt(1.0, 1.0));
  json j = to_json(assemble(builtin_schema("double", P, nullptr)));
  CHECK(j["components"].size() == 12);
  CHECK(j["orientable"] == true);
  CHECK(j["has_boundary"] == false);
  for (const auto& c : j["components"]) {
    CHECK(c.contains("cone_angle"));
    CHECK(c.contains("length"));
    CHECK(c["arcs"].size() == 2);
  }
}
