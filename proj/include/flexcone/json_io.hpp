#pragma once

#include "json.hpp"

#include "flexcone/conemanifold.hpp"
#include "flexcone/deaverage.hpp"

namespace flexcone {

using json = nlohmann::json;

json to_json(const TriangulatedPolyhedron& P);
TriangulatedPolyhedron polyhedron_from_json(const json& j);

json to_json(const FlexReport& r);
json to_json(const TruncatedHyperidealPolyhedron& T);
json to_json(const ConeManifold& M);
json to_json(const ManifoldFlexReport& r);
json to_json(const GluingSchema& s, const std::string& source_ref);
json to_json(const TubeResult& t);
json to_json(const CollisionResult& c);
json to_json(const LiftResult& l);
json to_json(const DeaverageResult& d);

// Schema file: `pieces` ({source, flex_sign}, one shared source) and
// `pairings`; `source_base` resolves relative source paths.
GluingSchema schema_from_json(const json& j, const std::string& source_base);

TriangulatedPolyhedron load_polyhedron(const std::string& path);
void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

}  // namespace flexcone
