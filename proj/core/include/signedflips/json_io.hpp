#ifndef SIGNEDFLIPS_JSON_IO_HPP
#define SIGNEDFLIPS_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "signedflips/filler.hpp"
#include "signedflips/flip_graph.hpp"
#include "signedflips/signing.hpp"
#include "signedflips/simplicial.hpp"
#include "signedflips/triangulation.hpp"

namespace sdf {

using json = nlohmann::json;

// {"n": 7, "triangles": [[1,2,7], ...]}, triples ascending, list sorted
json to_json(const PolygonTriangulation& t);
PolygonTriangulation triangulation_from_json(const json& j);

// {"n": 7, "start": [...], "flips": [{"diagonal": [3,6]}, ...]}
json to_json(const FlipSequence& s);
FlipSequence sequence_from_json(const json& j);

// base sequence plus "steps": per step a list of {"sign": "+", "triangle": [a,b,c]}
json to_json(const SignedFlipSequence& ss);

// {"order": k, "edges": [[i,j], ...]} with optional "coloring"
json to_json(const FlipInteractionGraph& g, const TwoColoring* coloring = nullptr);

// {"dim": d, "facets": [[...], ...]}
json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// {"colors": {"1": 0, "2": 1, ...}}
json to_json(const ColorMap& c);
ColorMap color_map_from_json(const json& j);
VertexColoring f4_coloring_from_json(const json& j);  // values restricted to 0..3
json to_json(const VertexColoring& c);

// {"seed": [...], "moves": [{"kind": "II", "tetrahedron": [...], ...}, ...]}
json to_json(const MoveDecomposition& d);

json load_json_file(const std::string& path);          // throws ParseError
void write_text_file(const std::string& path, const std::string& text);
std::string dump_pretty(const json& j);                // 2-space indent + newline

}  // namespace sdf

#endif
