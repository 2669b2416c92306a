#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flexcone/json_io.hpp"
#include "flexcone/generators.hpp"

namespace py = pybind11;
using namespace flexcone;

namespace {

Ambient ambient_from(const std::string& s) {
  if (s == "euclidean") return Ambient::euclidean;
  if (s == "minkowski") return Ambient::minkowski;
  throw std::invalid_argument("ambient must be euclidean or minkowski");
}

py::dict report_dict(const FlexReport& r) {
  py::dict d;
  d["singular_values"] = r.sigma;
  d["kernel_dim"] = r.kernel_dim;
  d["trivial_dim"] = r.trivial_dim;
  d["flexible"] = r.flexible;
  py::list basis;
  for (const auto& f : r.nontrivial) {
    py::list vecs;
    if (f.ambient == Ambient::euclidean)
      for (const auto& v : f.q3) vecs.append(v);
    else
      for (const auto& v : f.q4) vecs.append(v);
    basis.append(vecs);
  }
  d["flex_basis"] = basis;
  return d;
}

py::dict manifold_dict(const ConeManifold& M) {
  py::dict d;
  py::list comps;
  for (const auto& c : M.components) {
    py::dict cc;
    cc["arcs"] = c.arcs;
    cc["cone_angle"] = c.cone_angle;
    cc["length"] = c.length;
    cc["is_circle"] = c.is_circle;
    comps.append(cc);
  }
  d["components"] = comps;
  d["orientable"] = M.orientable;
  d["has_boundary"] = M.has_boundary;
  return d;
}

std::vector<Vec3> transferred_flex(const TriangulatedPolyhedron& src) {
  FlexField q = schonhardt_flex(src);
  std::vector<Vec3> v;
  for (size_t i = 0; i < src.V.size(); ++i)
    v.push_back(pogorelov_velocity(src.v3(int(i)), q.q3[i]));
  return v;
}

}  // namespace

PYBIND11_MODULE(_flexcone, m) {
  m.doc() = "infinitesimally flexible polyhedra and hyperbolic cone-manifolds";

  py::class_<TriangulatedPolyhedron,
             std::shared_ptr<TriangulatedPolyhedron>>(m, "Polyhedron")
      .def_property_readonly(
          "model", [](const TriangulatedPolyhedron& P) { return model_name(P.model); })
      .def_property_readonly("vertices",
                             [](const TriangulatedPolyhedron& P) { return P.V; })
      .def_property_readonly("faces",
                             [](const TriangulatedPolyhedron& P) { return P.F; })
      .def_property_readonly("edges",
                             [](const TriangulatedPolyhedron& P) {
                               std::vector<std::pair<int, int>> e;
                               for (const auto& ed : P.edges)
                                 e.push_back({ed.a, ed.b});
                               return e;
                             })
      .def("euler", &TriangulatedPolyhedron::euler)
      .def("edge_length", &TriangulatedPolyhedron::edge_length)
      .def("dihedral_angle",
           [](const TriangulatedPolyhedron& P, int e) {
             return dihedral_angle(P, e);
           })
      .def("to_json", [](const TriangulatedPolyhedron& P) {
        return to_json(P).dump();
      });

  py::class_<TruncatedHyperidealPolyhedron,
             std::shared_ptr<TruncatedHyperidealPolyhedron>>(m, "Truncated")
      .def_property_readonly("n_vertices",
                             &TruncatedHyperidealPolyhedron::n_vertices)
      .def_property_readonly("n_edges", &TruncatedHyperidealPolyhedron::n_edges)
      .def_property_readonly("n_faces", &TruncatedHyperidealPolyhedron::n_faces)
      .def("old_edge_length", &TruncatedHyperidealPolyhedron::old_edge_length)
      .def("old_edge_dihedral",
           &TruncatedHyperidealPolyhedron::old_edge_dihedral)
      .def("to_json", [](const TruncatedHyperidealPolyhedron& T) {
        return to_json(T).dump();
      });

  py::class_<GluingSchema>(m, "GluingSchema")
      .def_property_readonly("name",
                             [](const GluingSchema& s) { return s.name; })
      .def_property_readonly("npieces",
                             [](const GluingSchema& s) { return s.npieces; });

  m.def("polyhedron_from_json", [](const std::string& text) {
    return std::make_shared<TriangulatedPolyhedron>(
        polyhedron_from_json(json::parse(text)));
  });

  m.def("schonhardt",
        [](double a, double b, double twist) {
          return std::make_shared<TriangulatedPolyhedron>(
              schonhardt({a, b, twist}));
        },
        py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("twist") = M_PI / 2);
  m.def("gluck_octahedron",
        [](double perturb) {
          return std::make_shared<TriangulatedPolyhedron>(
              gluck_octahedron(perturb));
        },
        py::arg("perturb") = 0.0);
  m.def("twisted_antiprism",
        [](int n, double a, double b, bool twisted) {
          return std::make_shared<TriangulatedPolyhedron>(
              twisted_antiprism(n, a, b, twisted));
        },
        py::arg("n"), py::arg("a") = 1.0, py::arg("b") = 1.0,
        py::arg("twisted") = true);
  m.def("hyperideal_schonhardt",
        [](double a, double b, double twist, double shrink) {
          return std::make_shared<TriangulatedPolyhedron>(
              hyperideal_schonhardt({a, b, twist}, shrink));
        },
        py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("twist") = M_PI / 2,
        py::arg("shrink") = 0.95);
  m.def("hyperbolic_schonhardt",
        [](double a, double b, double twist) {
          return std::make_shared<TriangulatedPolyhedron>(
              hyperbolic_schonhardt(a, b, twist));
        },
        py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("twist") = M_PI / 2);
  m.def("regular_octahedron", [] {
    return std::make_shared<TriangulatedPolyhedron>(regular_octahedron());
  });
  m.def("random_octahedron", [](unsigned seed) {
    std::mt19937 rng(seed);
    return std::make_shared<TriangulatedPolyhedron>(random_octahedron(rng));
  });
  m.def("random_concurrent_octahedron", [](unsigned seed) {
    std::mt19937 rng(seed);
    return std::make_shared<TriangulatedPolyhedron>(
        random_concurrent_octahedron(rng));
  });
  m.def("ideal_twisted_octahedron_angles",
        [](double ratio) { return ideal_twisted_octahedron_angles({ratio}); },
        py::arg("ratio") = 1e3);

  m.def("flex_analysis",
        [](std::shared_ptr<TriangulatedPolyhedron> P,
           const std::string& ambient, double tol) {
          return report_dict(flex_analysis(*P, ambient_from(ambient), tol));
        },
        py::arg("P"), py::arg("ambient") = "euclidean",
        py::arg("tol") = 1e-9);
  m.def("blaschke_liebmann",
        [](std::shared_ptr<TriangulatedPolyhedron> P, double tol) {
          BlaschkeResult r = blaschke_liebmann(*P, tol);
          py::dict d;
          d["det_black"] = r.det_black;
          d["det_white"] = r.det_white;
          d["flexible"] = r.flexible;
          return d;
        },
        py::arg("P"), py::arg("tol") = 1e-8);

  m.def("truncate", [](std::shared_ptr<TriangulatedPolyhedron> P) {
    return std::make_shared<TruncatedHyperidealPolyhedron>(truncate(*P));
  });
  m.def("truncated_metrics",
        [](std::shared_ptr<TruncatedHyperidealPolyhedron> T) {
          TruncatedMetrics mt = truncated_metrics(*T);
          py::dict d;
          d["old_length_direct"] = mt.old_length_direct;
          d["old_length_dual"] = mt.old_length_dual;
          d["old_dihedral"] = mt.old_dihedral;
          d["max_new_edge_dihedral_dev"] = mt.max_new_edge_dihedral_dev;
          d["max_hexagon_angle_dev"] = mt.max_hexagon_angle_dev;
          d["max_length_mismatch"] = mt.max_length_mismatch;
          return d;
        });
  m.def("truncated_flex_analysis",
        [](std::shared_ptr<TruncatedHyperidealPolyhedron> T, double tol) {
          return report_dict(truncated_flex_analysis(*T, tol));
        },
        py::arg("T"), py::arg("tol") = 1e-9);
  m.def("min_tube_distance",
        [](std::shared_ptr<TruncatedHyperidealPolyhedron> T) {
          TubeResult r = min_tube_distance(*T);
          return py::make_tuple(r.distance, r.edge1, r.edge2);
        });

  m.def("builtin_schema",
        [](const std::string& name, std::shared_ptr<TriangulatedPolyhedron> P,
           bool truncated) {
          if (truncated || name != "double")
            return builtin_schema(
                name, nullptr,
                std::make_shared<TruncatedHyperidealPolyhedron>(truncate(*P)));
          return builtin_schema(name, P, nullptr);
        },
        py::arg("name"), py::arg("piece"), py::arg("truncated") = false);
  m.def("assemble",
        [](const GluingSchema& s) { return manifold_dict(assemble(s)); });
  m.def("manifold_flex_check", [](const GluingSchema& s) {
    const TriangulatedPolyhedron& src = s.trunc ? s.trunc->source : *s.poly;
    ManifoldFlexReport r = manifold_flex_check(s, transferred_flex(src));
    py::dict d;
    d["component_variation"] = r.component_variation;
    d["max_component_variation"] = r.max_component_variation;
    d["max_length_variation"] = r.max_length_variation;
    d["witness"] = r.witness;
    return d;
  });

  m.def("meridian_cover_search", [](int n) {
    return meridian_cover_search(prism_meridian_system(), n);
  });

  m.def("deaverage",
        [](double a, double b, double t) {
          SymmetricFlex sf = schonhardt_symmetric_flex(a, b);
          DeaverageResult r = deaverage(sf.poly, sf.P, sf.Q, t);
          py::dict d;
          d["spectrum_gap"] = r.spectrum_gap;
          d["congruent"] = r.congruent;
          return d;
        },
        py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("t") = 0.01);
  m.def("cone_angle_triple", &cone_angle_triple, py::arg("family"),
        py::arg("t"), py::arg("a"), py::arg("b"));
  m.def("collision_search",
        [](double eps, double lo, double hi) {
          CollisionResult r = collision_search(eps, lo, hi);
          return py::module_::import("json").attr("loads")(to_json(r).dump());
        },
        py::arg("eps") = 0.05, py::arg("lo") = 0.8, py::arg("hi") = 1.2);
}
