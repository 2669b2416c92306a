#pragma once

#include <memory>
#include <string>

#include "flexcone/hyperideal.hpp"

namespace flexcone {

enum class FaceKind { tri, hex, quad };

struct FaceRef {
  int piece = 0;
  FaceKind kind = FaceKind::tri;
  int index = 0;
};

struct Pairing {
  FaceRef a, b;
  // Local vertex ids (source vertex ids for tri faces, truncation-vertex
  // ids for hex/quad faces) of face a mapped to ids of face b.
  std::vector<std::pair<int, int>> vmap;
};

struct GluingSchema {
  std::string name;
  // Every piece is an isometric copy of one of these.
  std::shared_ptr<const TriangulatedPolyhedron> poly;
  std::shared_ptr<const TruncatedHyperidealPolyhedron> trunc;
  int npieces = 0;
  std::vector<int> flex_sign;
  std::vector<Pairing> pairings;
};

// name in {double, double_of_double, three_comp, four_comp}.
GluingSchema builtin_schema(const std::string& name,
                            std::shared_ptr<const TriangulatedPolyhedron> poly,
                            std::shared_ptr<const TruncatedHyperidealPolyhedron> trunc);

struct SingularComponent {
  std::vector<std::pair<int, int>> arcs;  // (piece, source edge index)
  double cone_angle = 0.0;
  double length = 0.0;
  bool is_circle = false;
};

struct ConeManifold {
  std::vector<SingularComponent> components;  // angle != 2pi only
  bool orientable = true;
  bool has_boundary = false;
};

ConeManifold assemble(const GluingSchema& schema);

struct ManifoldFlexReport {
  std::vector<double> component_variation;  // signed sums per component
  double max_component_variation = 0.0;
  double max_length_variation = 0.0;
  double witness = 0.0;  // first-order change of a non-protected angle
};

// `velocity` is a klein-coordinate velocity field on the source vertices
// (Pogorelov transfer of a Euclidean flex of the piece).
ManifoldFlexReport manifold_flex_check(const GluingSchema& schema,
                                       const std::vector<Vec3>& velocity,
                                       double h = 1e-4);

struct MeridianSystem {
  std::vector<std::string> generators;
  // Words as sequences of (generator index, exponent +-1).
  std::vector<std::vector<std::pair<int, int>>> words;
  std::vector<std::string> word_names;
};

MeridianSystem prism_meridian_system();

// All assignments generator -> Z_n sending every meridian word to a
// nonzero element.
std::vector<std::vector<int>> meridian_cover_search(const MeridianSystem& sys,
                                                    int n);

struct LiftedComponent {
  double cone_angle = 0.0;
  int multiplicity = 1;
  bool branched = false;
};

struct LiftResult {
  int k = 0;
  std::vector<LiftedComponent> components;
  bool flexibility_inherited = true;
};

LiftResult lift_cone_angles(const ConeManifold& M,
                            const std::vector<int>& branched, int k);

}  // namespace flexcone
