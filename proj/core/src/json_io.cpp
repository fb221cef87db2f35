#include "signedflips/json_io.hpp"

#include <fstream>

namespace sdf {

namespace {

std::vector<Vertex> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Vertex> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Triangle triangle_from(const json& j) {
    auto v = int_array(j, "triangle");
    if (v.size() != 3) throw ParseError("triangle needs exactly 3 vertices");
    try {
        return Triangle(v[0], v[1], v[2]);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Edge edge_from(const json& j) {
    auto v = int_array(j, "edge");
    if (v.size() != 2) throw ParseError("edge needs exactly 2 vertices");
    try {
        return Edge(v[0], v[1]);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

json to_json(const PolygonTriangulation& t) {
    json tris = json::array();
    for (const Triangle& tr : t.triangles()) tris.push_back({tr.v[0], tr.v[1], tr.v[2]});
    return json{{"n", t.n()}, {"triangles", tris}};
}

PolygonTriangulation triangulation_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("triangulation must be an object");
    const json& n = field(j, "n");
    if (!n.is_number_integer()) throw ParseError("\"n\" must be an integer");
    std::vector<Triangle> tris;
    for (const auto& t : field(j, "triangles")) tris.push_back(triangle_from(t));
    try {
        return PolygonTriangulation(n.get<int>(), std::move(tris));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json to_json(const FlipSequence& s) {
    json flips = json::array();
    for (const FlipRecord& f : s.flips)
        flips.push_back({{"diagonal", {f.diagonal_before.a, f.diagonal_before.b}}});
    json start = json::array();
    for (const Triangle& tr : s.start.triangles()) start.push_back({tr.v[0], tr.v[1], tr.v[2]});
    return json{{"n", s.start.n()}, {"start", start}, {"flips", flips}};
}

FlipSequence sequence_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("sequence must be an object");
    PolygonTriangulation start = triangulation_from_json(
        json{{"n", field(j, "n")}, {"triangles", field(j, "start")}});
    std::vector<Edge> diagonals;
    for (const auto& f : field(j, "flips")) {
        if (!f.is_object()) throw ParseError("each flip must be an object");
        diagonals.push_back(edge_from(field(f, "diagonal")));
    }
    try {
        return make_sequence(start, diagonals);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json to_json(const SignedFlipSequence& ss) {
    json out = to_json(ss.base);
    json steps = json::array();
    for (const auto& signs : ss.step_signs) {
        json step = json::array();
        for (const auto& [t, s] : signs)
            step.push_back({{"sign", std::string(1, to_char(s))},
                            {"triangle", {t.v[0], t.v[1], t.v[2]}}});
        steps.push_back(std::move(step));
    }
    out["steps"] = std::move(steps);
    return out;
}

json to_json(const FlipInteractionGraph& g, const TwoColoring* coloring) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    json out{{"order", g.order}, {"edges", edges}};
    if (coloring != nullptr) {
        json c = json::object();
        for (const auto& [i, col] : coloring->color) c[std::to_string(i)] = col;
        out["coloring"] = std::move(c);
    }
    return out;
}

json to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (const Facet& f : k.facets) facets.push_back(f);
    return json{{"dim", k.dim}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("complex must be an object");
    const json& d = field(j, "dim");
    if (!d.is_number_integer()) throw ParseError("\"dim\" must be an integer");
    std::vector<Facet> facets;
    for (const auto& f : field(j, "facets")) facets.push_back(int_array(f, "facet"));
    try {
        return make_complex(d.get<int>(), std::move(facets));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json to_json(const ColorMap& c) {
    json colors = json::object();
    for (const auto& [v, col] : c) colors[std::to_string(v)] = col;
    return json{{"colors", colors}};
}

ColorMap color_map_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("coloring must be an object");
    const json& colors = field(j, "colors");
    if (!colors.is_object()) throw ParseError("\"colors\" must be an object");
    ColorMap out;
    for (const auto& [key, val] : colors.items()) {
        if (!val.is_number_integer()) throw ParseError("colors must be integers");
        try {
            out[std::stoi(key)] = val.get<int>();
        } catch (const std::exception&) {
            throw ParseError("color keys must be vertex labels, got \"" + key + "\"");
        }
    }
    return out;
}

VertexColoring f4_coloring_from_json(const json& j) {
    VertexColoring out;
    for (const auto& [v, c] : color_map_from_json(j)) {
        if (c < 0 || c > 3) throw ParseError("F4 colors are integers 0..3");
        out.emplace(v, F4(c));
    }
    return out;
}

json to_json(const VertexColoring& c) {
    json colors = json::object();
    for (const auto& [v, col] : c) colors[std::to_string(v)] = col.value();
    return json{{"colors", colors}};
}

json to_json(const MoveDecomposition& d) {
    json moves = json::array();
    for (const MoveStep& s : d.steps) {
        json removed = json::array(), inserted = json::array();
        for (const Triangle& t : s.removed) removed.push_back({t.v[0], t.v[1], t.v[2]});
        for (const Triangle& t : s.inserted) inserted.push_back({t.v[0], t.v[1], t.v[2]});
        moves.push_back({{"kind", to_string(s.kind)},
                         {"tetrahedron", {s.tetrahedron.v[0], s.tetrahedron.v[1],
                                          s.tetrahedron.v[2], s.tetrahedron.v[3]}},
                         {"removed", removed},
                         {"inserted", inserted}});
    }
    return json{{"seed", {d.seed.v[0], d.seed.v[1], d.seed.v[2], d.seed.v[3]}},
                {"moves", moves}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string dump_pretty(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sdf
