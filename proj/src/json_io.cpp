#include "flexcone/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace flexcone {

namespace {

json vec_array(const Vec4& v, int dim) {
  json a = json::array();
  for (int k = 0; k < dim; ++k) a.push_back(v[k]);
  return a;
}

int coord_dim(Model m) {
  return (m == Model::hyperboloid || m == Model::desitter) ? 4 : 3;
}

}  // namespace

json to_json(const TriangulatedPolyhedron& P) {
  json j;
  j["space"] = model_name(P.model);
  j["vertices"] = json::array();
  for (const auto& v : P.V) j["vertices"].push_back(vec_array(v, coord_dim(P.model)));
  j["faces"] = json::array();
  for (const auto& f : P.F) j["faces"].push_back({f[0], f[1], f[2]});
  if (P.coloring)
    j["coloring"] = {{"black", P.coloring->black}, {"white", P.coloring->white}};
  return j;
}

TriangulatedPolyhedron polyhedron_from_json(const json& j) {
  Model m = model_from_name(j.at("space").get<std::string>());
  std::vector<Vec4> V;
  for (const auto& row : j.at("vertices")) {
    Vec4 v = Vec4::Zero();
    if (row.size() != size_t(coord_dim(m)))
      throw std::invalid_argument("vertex " + std::to_string(V.size()) +
                                  " has wrong coordinate count");
    for (size_t k = 0; k < row.size(); ++k) v[int(k)] = row[k].get<double>();
    V.push_back(v);
  }
  std::vector<std::array<int, 3>> F;
  for (const auto& row : j.at("faces")) {
    if (row.size() != 3)
      throw std::invalid_argument("face " + std::to_string(F.size()) +
                                  " is not a triangle");
    F.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  std::optional<Coloring> col;
  if (j.contains("coloring")) {
    Coloring c;
    c.black = j["coloring"].at("black").get<std::vector<int>>();
    c.white = j["coloring"].at("white").get<std::vector<int>>();
    col = c;
  }
  return build_polyhedron(m, std::move(V), std::move(F), col);
}

json to_json(const FlexReport& r) {
  json j;
  j["singular_values"] = r.sigma;
  j["kernel_dim"] = r.kernel_dim;
  j["trivial_dim"] = r.trivial_dim;
  j["verdict"] = r.flexible ? "flexible" : "rigid";
  j["flex_basis"] = json::array();
  for (const auto& f : r.nontrivial) {
    json b;
    b["ambient"] = f.ambient == Ambient::euclidean ? "euclidean" : "minkowski";
    b["vectors"] = json::array();
    if (f.ambient == Ambient::euclidean)
      for (const auto& v : f.q3) b["vectors"].push_back({v[0], v[1], v[2]});
    else
      for (const auto& v : f.q4) b["vectors"].push_back(vec_array(v, 4));
    j["flex_basis"].push_back(b);
  }
  return j;
}

json to_json(const TruncatedHyperidealPolyhedron& T) {
  json j;
  j["source"] = to_json(T.source);
  j["desitter_vertices"] = json::array();
  for (const auto& v : T.ds) j["desitter_vertices"].push_back(vec_array(v, 4));
  j["vertices"] = json::array();  // p_ij in hyperboloid coordinates
  for (const auto& v : T.tv) j["vertices"].push_back(vec_array(v, 4));
  j["vertex_edge_end"] = json::array();
  for (auto [i, k] : T.tv_pair) j["vertex_edge_end"].push_back({i, k});
  j["old_faces"] = T.hexes;
  j["new_faces"] = T.quads;
  json oe = json::array();
  for (size_t e = 0; e < T.source.edges.size(); ++e)
    oe.push_back({{"ends", {T.source.edges[e].a, T.source.edges[e].b}},
                  {"length", T.old_edge_length(int(e))},
                  {"dihedral", T.old_edge_dihedral(int(e))}});
  j["old_edges"] = oe;
  return j;
}

json to_json(const ConeManifold& M) {
  json j;
  j["components"] = json::array();
  for (const auto& c : M.components) {
    json cc;
    cc["arcs"] = json::array();
    for (auto [p, e] : c.arcs) cc["arcs"].push_back({p, e});
    cc["cone_angle"] = c.cone_angle;
    cc["length"] = c.length;
    cc["is_circle"] = c.is_circle;
    j["components"].push_back(cc);
  }
  j["orientable"] = M.orientable;
  j["has_boundary"] = M.has_boundary;
  return j;
}

json to_json(const ManifoldFlexReport& r) {
  return {{"component_variation", r.component_variation},
          {"max_component_variation", r.max_component_variation},
          {"max_length_variation", r.max_length_variation},
          {"witness", r.witness}};
}

namespace {

std::string kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::tri: return "tri";
    case FaceKind::hex: return "hex";
    case FaceKind::quad: return "quad";
  }
  return "?";
}

FaceKind kind_from_name(const std::string& s) {
  if (s == "tri") return FaceKind::tri;
  if (s == "hex") return FaceKind::hex;
  if (s == "quad") return FaceKind::quad;
  throw std::invalid_argument("unknown face kind " + s);
}

json face_ref_json(const FaceRef& f) {
  return {{"piece", f.piece}, {"kind", kind_name(f.kind)}, {"index", f.index}};
}

FaceRef face_ref_from_json(const json& j) {
  return {j.at("piece").get<int>(), kind_from_name(j.at("kind")),
          j.at("index").get<int>()};
}

}  // namespace

json to_json(const GluingSchema& s, const std::string& source_ref) {
  json j;
  j["name"] = s.name;
  j["pieces"] = json::array();
  for (int p = 0; p < s.npieces; ++p)
    j["pieces"].push_back({{"source", source_ref},
                           {"truncated", bool(s.trunc)},
                           {"flex_sign", s.flex_sign[p]}});
  j["pairings"] = json::array();
  for (const auto& pr : s.pairings) {
    json pj;
    pj["a"] = face_ref_json(pr.a);
    pj["b"] = face_ref_json(pr.b);
    pj["vertex_map"] = json::array();
    for (auto [u, v] : pr.vmap) pj["vertex_map"].push_back({u, v});
    pj["orientation_reversing"] = true;  // glued copies are mirrored
    j["pairings"].push_back(pj);
  }
  return j;
}

GluingSchema schema_from_json(const json& j, const std::string& source_base) {
  GluingSchema s;
  s.name = j.value("name", "custom");
  const json& pieces = j.at("pieces");
  s.npieces = int(pieces.size());
  std::string src;
  bool truncated = false;
  for (const auto& p : pieces) {
    std::string ps = p.at("source").get<std::string>();
    if (src.empty()) {
      src = ps;
      truncated = p.value("truncated", false);
    } else if (ps != src || p.value("truncated", false) != truncated) {
      throw std::invalid_argument("all pieces must share one source");
    }
    s.flex_sign.push_back(p.at("flex_sign").get<int>());
  }
  std::filesystem::path path(src);
  if (path.is_relative()) path = std::filesystem::path(source_base) / path;
  auto poly = std::make_shared<TriangulatedPolyhedron>(
      load_polyhedron(path.string()));
  if (truncated)
    s.trunc = std::make_shared<TruncatedHyperidealPolyhedron>(truncate(*poly));
  else
    s.poly = std::move(poly);
  for (const auto& pj : j.at("pairings")) {
    Pairing pr;
    pr.a = face_ref_from_json(pj.at("a"));
    pr.b = face_ref_from_json(pj.at("b"));
    for (const auto& row : pj.at("vertex_map"))
      pr.vmap.push_back({row[0].get<int>(), row[1].get<int>()});
    s.pairings.push_back(std::move(pr));
  }
  return s;
}

json to_json(const TubeResult& t) {
  return {{"min_distance", t.distance},
          {"edge1", {t.edge1.first, t.edge1.second}},
          {"edge2", {t.edge2.first, t.edge2.second}}};
}

json to_json(const CollisionResult& c) {
  return {{"family1", {{"family", 2}, {"t", c.t1}, {"a", c.a1}, {"b", c.b1}}},
          {"family2", {{"family", 1}, {"t", c.t2}, {"a", c.a2}, {"b", c.b2}}},
          {"triple1", {c.triple1[0], c.triple1[1], c.triple1[2]}},
          {"triple2", {c.triple2[0], c.triple2[1], c.triple2[2]}},
          {"residual", c.residual},
          {"spectrum_witness", c.spectrum_witness},
          {"iterations", c.iterations}};
}

json to_json(const LiftResult& l) {
  json comps = json::array();
  for (const auto& c : l.components)
    comps.push_back({{"cone_angle", c.cone_angle},
                     {"multiplicity", c.multiplicity},
                     {"branched", c.branched}});
  return {{"k", l.k},
          {"components", comps},
          {"flexibility_inherited", l.flexibility_inherited}};
}

json to_json(const DeaverageResult& d) {
  json plus = json::array(), minus = json::array();
  for (const auto& v : d.plus) plus.push_back(vec_array(v, 4));
  for (const auto& v : d.minus) minus.push_back(vec_array(v, 4));
  return {{"plus", plus},
          {"minus", minus},
          {"spectrum_gap", d.spectrum_gap},
          {"congruent", d.congruent}};
}

TriangulatedPolyhedron load_polyhedron(const std::string& path) {
  return polyhedron_from_json(load_json(path));
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace flexcone
