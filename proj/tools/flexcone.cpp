#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "flexcone/json_io.hpp"
#include "flexcone/generators.hpp"

using namespace flexcone;

namespace {

constexpr int kExitFlexible = 10;

struct Output {
  std::string path;  // empty -> stdout
  bool text = false;

  void emit(const json& j, const std::string& summary) const {
    if (!path.empty()) {
      save_json(j, path);
      if (text) std::cout << summary << "\n";
      return;
    }
    if (text)
      std::cout << summary << "\n";
    else
      std::cout << j.dump(2) << "\n";
  }
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.path, "write the JSON report to this file");
  auto* t = cmd->add_flag("--text", out.text, "human-readable summary");
  cmd->add_flag("--json", "JSON output (default)")->excludes(t);
}

TriangulatedPolyhedron generate_named(const std::string& name, double a,
                                      double b, double twist, double shrink,
                                      double perturb, int n, bool untwisted,
                                      unsigned seed) {
  if (name == "schonhardt") return schonhardt({a, b, twist});
  if (name == "gluck") return gluck_octahedron(perturb);
  if (name == "antiprism") return twisted_antiprism(n, a, b, !untwisted);
  if (name == "hyperideal") return hyperideal_schonhardt({a, b, twist}, shrink);
  if (name == "hyperbolic") return hyperbolic_schonhardt(a, b, twist);
  if (name == "regular") return regular_octahedron();
  std::mt19937 rng(seed);
  if (name == "random") return random_octahedron(rng);
  if (name == "concurrent") return random_concurrent_octahedron(rng);
  throw CLI::ValidationError("unknown generator " + name);
}

// Klein velocity field used by the gluing constructions: the explicit
// Schonhardt flex of the klein coordinates, Pogorelov-transferred.
std::vector<Vec3> transferred_flex(const TriangulatedPolyhedron& src) {
  FlexField q = schonhardt_flex(src);
  std::vector<Vec3> v;
  for (size_t i = 0; i < src.V.size(); ++i)
    v.push_back(pogorelov_velocity(src.v3(int(i)), q.q3[i]));
  return v;
}

GluingSchema make_schema(const std::string& builtin, const std::string& piece,
                         const std::string& schema_file, bool truncated) {
  if (!schema_file.empty()) {
    auto dir = std::filesystem::path(schema_file).parent_path().string();
    return schema_from_json(load_json(schema_file), dir);
  }
  auto poly = std::make_shared<TriangulatedPolyhedron>(load_polyhedron(piece));
  bool trunc = truncated || builtin != "double";
  if (trunc)
    return builtin_schema(builtin, nullptr,
                          std::make_shared<TruncatedHyperidealPolyhedron>(
                              truncate(*poly)));
  return builtin_schema(builtin, poly, nullptr);
}

int cmd_reproduce(const std::string& id);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinitesimally flexible polyhedra and hyperbolic "
               "cone-manifolds"};
  app.require_subcommand(1);

  double tol = 1e-9;
  unsigned seed = 0;
  app.add_option("--tol", tol, "kernel tolerance")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();

  std::string input, ambient = "euclidean", gen_name, schema_file, builtin;
  std::string piece, repro_id;
  double a = 1.0, b = 1.0, twist = M_PI / 2, shrink = 0.95, perturb = 0.0;
  double t = 0.01, eps = 0.05, lo = 0.8, hi = 1.2, ratio = 1e3;
  int n = 3, cover_n = 7, k = 7;
  bool untwisted = false, truncated = false, killing = false;

  Output out;

  auto* analyze = app.add_subcommand("analyze", "flexibility analysis");
  analyze->add_option("input", input)->required();
  analyze->add_option("--ambient", ambient)
      ->check(CLI::IsMember({"euclidean", "minkowski"}));
  add_output(analyze, out);

  auto* bl = app.add_subcommand("bl", "Blaschke-Liebmann determinant test");
  bl->add_option("input", input)->required();
  add_output(bl, out);

  auto* gen = app.add_subcommand("generate", "generate an example polyhedron");
  gen->add_option("name", gen_name)->required();
  gen->add_option("--a", a);
  gen->add_option("--b", b);
  gen->add_option("--twist", twist);
  gen->add_option("--shrink", shrink);
  gen->add_option("--perturb", perturb);
  gen->add_option("--n", n);
  gen->add_flag("--untwisted", untwisted);
  add_output(gen, out);

  auto* trunc = app.add_subcommand("truncate", "polar truncation");
  trunc->add_option("input", input)->required();
  add_output(trunc, out);

  auto* metrics = app.add_subcommand("metrics", "truncated polyhedron metrics");
  metrics->add_option("input", input)->required();
  add_output(metrics, out);

  auto* tube = app.add_subcommand("tube", "minimum old-edge tube distance");
  tube->add_option("input", input)->required();
  add_output(tube, out);

  auto add_schema_opts = [&](CLI::App* cmd) {
    cmd->add_option("--schema", schema_file, "schema JSON file");
    cmd->add_option("--builtin", builtin,
                    "double|double_of_double|three_comp|four_comp");
    cmd->add_option("--piece", piece, "piece polyhedron file");
    cmd->add_flag("--truncated", truncated, "truncate the piece first");
  };
  auto* glue = app.add_subcommand("glue", "assemble a cone-manifold");
  add_schema_opts(glue);
  add_output(glue, out);

  auto* flexcheck =
      app.add_subcommand("flexcheck", "first-order cone-angle preservation");
  add_schema_opts(flexcheck);
  add_output(flexcheck, out);

  auto* cover = app.add_subcommand("cover", "meridian cover search");
  cover->add_option("--n", cover_n);
  add_output(cover, out);

  auto* lift = app.add_subcommand("lift", "branched cover angle ledger");
  add_schema_opts(lift);
  lift->add_option("--k", k, "cover degree");
  add_output(lift, out);

  auto* deav = app.add_subcommand("deaverage", "Pogorelov deaveraging");
  deav->add_option("--a", a);
  deav->add_option("--b", b);
  deav->add_option("--t", t);
  deav->add_flag("--killing", killing, "use a Killing field instead");
  add_output(deav, out);

  auto* collide = app.add_subcommand("collide", "equal-cone-angle collision");
  collide->add_option("--eps", eps);
  collide->add_option("--lo", lo);
  collide->add_option("--hi", hi);
  add_output(collide, out);

  auto* repro = app.add_subcommand("reproduce", "reproduce a known result");
  repro->add_option("id", repro_id)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2-3comp", "thm2-4comp", "thm3",
                             "thm4", "angles-ideal", "tube", "cover"}));
  repro->add_option("--ratio", ratio);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      TriangulatedPolyhedron P = load_polyhedron(input);
      FlexReport r = flex_analysis(
          P, ambient == "euclidean" ? Ambient::euclidean : Ambient::minkowski,
          tol);
      out.emit(to_json(r),
               std::string(r.flexible ? "flexible" : "rigid") + " (kernel " +
                   std::to_string(r.kernel_dim) + ", trivial " +
                   std::to_string(r.trivial_dim) + ")");
      return r.flexible ? kExitFlexible : 0;
    }
    if (*bl) {
      BlaschkeResult r = blaschke_liebmann(load_polyhedron(input));
      json j = {{"det_black", r.det_black},
                {"det_white", r.det_white},
                {"verdict", r.flexible ? "flexible" : "rigid"}};
      out.emit(j, std::string(r.flexible ? "flexible" : "rigid") +
                      " (det_black " + std::to_string(r.det_black) + ")");
      return r.flexible ? kExitFlexible : 0;
    }
    if (*gen) {
      TriangulatedPolyhedron P = generate_named(gen_name, a, b, twist, shrink,
                                                perturb, n, untwisted, seed);
      out.emit(to_json(P), gen_name + ": " + std::to_string(P.V.size()) +
                               " vertices, " + std::to_string(P.F.size()) +
                               " faces");
      return 0;
    }
    if (*trunc) {
      TruncatedHyperidealPolyhedron T = truncate(load_polyhedron(input));
      out.emit(to_json(T), "truncated: " + std::to_string(T.n_vertices()) +
                               " vertices, " + std::to_string(T.n_edges()) +
                               " edges, " + std::to_string(T.n_faces()) +
                               " faces");
      return 0;
    }
    if (*metrics) {
      TruncatedHyperidealPolyhedron T = truncate(load_polyhedron(input));
      TruncatedMetrics m = truncated_metrics(T);
      json j = {{"old_length_direct", m.old_length_direct},
                {"old_length_dual", m.old_length_dual},
                {"old_dihedral", m.old_dihedral},
                {"new_edge_lengths", m.new_edge_lengths},
                {"max_new_edge_dihedral_dev", m.max_new_edge_dihedral_dev},
                {"max_hexagon_angle_dev", m.max_hexagon_angle_dev},
                {"max_length_mismatch", m.max_length_mismatch}};
      out.emit(j, "max hexagon angle deviation " +
                      std::to_string(m.max_hexagon_angle_dev));
      return 0;
    }
    if (*tube) {
      TubeResult r = min_tube_distance(truncate(load_polyhedron(input)));
      out.emit(to_json(r), "min tube distance " + std::to_string(r.distance));
      return 0;
    }
    if (*glue) {
      GluingSchema s = make_schema(builtin, piece, schema_file, truncated);
      ConeManifold M = assemble(s);
      out.emit(to_json(M),
               std::to_string(M.components.size()) + " singular components, " +
                   (M.orientable ? "orientable" : "non-orientable") +
                   (M.has_boundary ? ", with boundary" : ""));
      return 0;
    }
    if (*flexcheck) {
      GluingSchema s = make_schema(builtin, piece, schema_file, truncated);
      const TriangulatedPolyhedron& src = s.trunc ? s.trunc->source : *s.poly;
      ManifoldFlexReport r = manifold_flex_check(s, transferred_flex(src));
      out.emit(to_json(r), "max component variation " +
                               std::to_string(r.max_component_variation) +
                               ", witness " + std::to_string(r.witness));
      return 0;
    }
    if (*cover) {
      MeridianSystem sys = prism_meridian_system();
      auto found = meridian_cover_search(sys, cover_n);
      json j = {{"n", cover_n},
                {"generators", sys.generators},
                {"words", sys.word_names},
                {"assignments", found},
                {"count", found.size()}};
      out.emit(j, std::to_string(found.size()) + " valid assignments mod " +
                      std::to_string(cover_n));
      return 0;
    }
    if (*lift) {
      GluingSchema s = make_schema(builtin, piece, schema_file, truncated);
      ConeManifold M = assemble(s);
      std::vector<int> branched;
      for (size_t i = 0; i < M.components.size(); ++i)
        if (M.components[i].cone_angle < 2 * M_PI) branched.push_back(int(i));
      LiftResult r = lift_cone_angles(M, branched, k);
      double mn = 1e300;
      for (const auto& c : r.components) mn = std::min(mn, c.cone_angle);
      out.emit(to_json(r), "minimum lifted cone angle " + std::to_string(mn));
      return 0;
    }
    if (*deav) {
      SymmetricFlex sf = schonhardt_symmetric_flex(a, b);
      std::vector<Vec4> Q = sf.Q;
      if (killing) Q = killing_basis_minkowski(sf.P)[4];
      DeaverageResult r = deaverage(sf.poly, sf.P, Q, t);
      out.emit(to_json(r), std::string("spectrum gap ") +
                               std::to_string(r.spectrum_gap) +
                               (r.congruent ? ", congruent" : ", non-congruent"));
      return 0;
    }
    if (*collide) {
      CollisionResult r = collision_search(eps, lo, hi);
      out.emit(to_json(r), "collision at t2=" + std::to_string(r.t2) +
                               " a2=" + std::to_string(r.a2) +
                               " b2=" + std::to_string(r.b2) + " (residual " +
                               std::to_string(r.residual) + ")");
      return 0;
    }
    if (*repro) return cmd_reproduce(repro_id);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

namespace {

int check(bool ok, const std::string& what) {
  std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
  return ok ? 0 : 1;
}

int cmd_reproduce(const std::string& id) {
  int fails = 0;
  if (id == "thm1") {
    auto poly = std::make_shared<TriangulatedPolyhedron>(
        hyperbolic_schonhardt(1.0, 1.0));
    FlexReport fr = flex_analysis(*poly, Ambient::minkowski);
    fails += check(fr.flexible && fr.kernel_dim == 7,
                   "compact twisted octahedron is flexible (kernel 7)");
    GluingSchema s = builtin_schema("double", poly, nullptr);
    ConeManifold M = assemble(s);
    fails += check(M.components.size() == 12 && !M.has_boundary,
                   "double is closed with 12 singular components");
    ManifoldFlexReport r = manifold_flex_check(s, transferred_flex(*poly));
    fails += check(r.max_component_variation < 1e-6 && r.witness > 1e-3,
                   "cone angles preserved to first order, flex nontrivial");
  } else if (id == "thm2-3comp" || id == "thm2-4comp") {
    bool three = id == "thm2-3comp";
    auto T = std::make_shared<TruncatedHyperidealPolyhedron>(
        truncate(hyperideal_schonhardt()));
    GluingSchema s =
        builtin_schema(three ? "three_comp" : "four_comp", nullptr, T);
    ConeManifold M = assemble(s);
    size_t want = three ? 3 : 4;
    fails += check(M.components.size() == want && !M.has_boundary,
                   "closed manifold with " + std::to_string(want) +
                       " singular components");
    fails += check(M.orientable != three,
                   three ? "non-orientable" : "orientable");
    int reflex = 0;
    for (const auto& c : M.components) reflex += c.cone_angle > 2 * M_PI;
    fails += check(reflex == 1, "exactly one cone angle above 2pi");
    ManifoldFlexReport r = manifold_flex_check(s, transferred_flex(T->source));
    fails += check(r.max_component_variation < 1e-6 && r.witness > 1e-3,
                   "infinitesimally flexible");
  } else if (id == "thm3") {
    auto T = std::make_shared<TruncatedHyperidealPolyhedron>(
        truncate(hyperideal_schonhardt({1.0, 3.0, M_PI / 2}, 0.999)));
    GluingSchema s = builtin_schema("double", nullptr, T);
    ConeManifold M = assemble(s);
    bool all_big = true;
    std::vector<int> branched;
    for (size_t i = 0; i < M.components.size(); ++i) {
      all_big = all_big && M.components[i].cone_angle > 2 * M_PI / 7;
      if (M.components[i].cone_angle < 2 * M_PI) branched.push_back(int(i));
    }
    fails += check(all_big, "all cone angles of the double exceed 2pi/7");
    auto found = meridian_cover_search(prism_meridian_system(), 7);
    bool has = false;
    for (const auto& x : found)
      has = has || x == std::vector<int>{1, 1, 2, 1};
    fails += check(has, "sevenfold cover certificate (1,1,2,1)");
    LiftResult lr = lift_cone_angles(M, branched, 7);
    bool lifted = true;
    for (const auto& c : lr.components)
      lifted = lifted && c.cone_angle > 2 * M_PI;
    fails += check(lifted, "all lifted cone angles exceed 2pi");
  } else if (id == "thm4") {
    CollisionResult r = collision_search();
    fails += check(r.residual < 1e-8, "cone-angle triples collide");
    fails += check(r.spectrum_witness > 1e-6, "pieces are non-isometric");
  } else if (id == "angles-ideal") {
    auto cl = ideal_twisted_octahedron_angles({1e3});
    std::array<double, 4> lim = {M_PI / 6, M_PI / 3, M_PI / 3, 7 * M_PI / 6};
    bool near = true;
    for (int i = 0; i < 4; ++i) near = near && std::abs(cl[i] - lim[i]) < 1e-2;
    fails += check(near, "angle classes near (pi/6, pi/3, pi/3, 7pi/6)");
    bool big = true;
    for (double v : cl) big = big && v > M_PI / 7;
    fails += check(big, "all classes above pi/7 at ratio 1e3");
  } else if (id == "tube") {
    TubeResult r = min_tube_distance(truncate(hyperideal_schonhardt()));
    fails += check(r.distance <= std::atanh(1.0 / std::sqrt(3.0)) + 1e-9,
                   "tube distance within arctanh(1/sqrt(3))");
    std::cout << "  min distance " << r.distance << " at edges ("
              << r.edge1.first << "," << r.edge1.second << ") and ("
              << r.edge2.first << "," << r.edge2.second << ")\n";
  } else if (id == "cover") {
    auto found = meridian_cover_search(prism_meridian_system(), 7);
    bool has = false;
    for (const auto& x : found)
      has = has || x == std::vector<int>{1, 1, 2, 1};
    fails += check(has, "assignment (1,1,2,1) is valid mod 7");
  }
  return fails == 0 ? 0 : 1;
}

}  // namespace
