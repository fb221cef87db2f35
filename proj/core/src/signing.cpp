#include "signedflips/signing.hpp"

#include <stdexcept>

#include "signedflips/errors.hpp"

namespace sdf {

F4::F4(int value) : v_(static_cast<std::uint8_t>(value)) {
    if (value < 0 || value > 3) throw std::invalid_argument("F4 values are 0..3");
}

namespace {

F4 color_at(const VertexColoring& vc, Vertex v) {
    auto it = vc.find(v);
    if (it == vc.end()) throw NotProper("vertex " + std::to_string(v) + " is uncolored");
    return it->second;
}

}  // namespace

bool is_proper(const PolygonTriangulation& t, const VertexColoring& vc) {
    for (const Edge& e : t.edges())
        if (color_at(vc, e.a) == color_at(vc, e.b)) return false;
    return true;
}

EdgeColoring edge_coloring_from_vertices(const PolygonTriangulation& t, const VertexColoring& vc) {
    EdgeColoring ec;
    for (const Edge& e : t.edges()) {
        F4 c = color_at(vc, e.a) + color_at(vc, e.b);
        if (c.is_zero())
            throw NotProper("edge " + to_string(e) + " has equal endpoint colors");
        ec.emplace(e, c);
    }
    return ec;
}

Sign sign_of_color_cycle(F4 e1, F4 e2, F4 e3) {
    int a = e1.value(), b = e2.value(), c = e3.value();
    if (a == 0 || b == 0 || c == 0 || a == b || b == c || a == c)
        throw TaitViolation("edge colors around a triangle must be the three nonzero elements");
    // forward rotations of (1, w, w+1); the remaining three orders are reversed
    bool forward = (a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) ||
                   (a == 3 && b == 1 && c == 2);
    return forward ? Sign::plus : Sign::minus;
}

TriangleSigns signs_from_edge_coloring(const PolygonTriangulation& t, const EdgeColoring& ec) {
    auto at = [&ec](const Edge& e) {
        auto it = ec.find(e);
        if (it == ec.end()) throw TaitViolation("edge " + to_string(e) + " is uncolored");
        return it->second;
    };
    TriangleSigns out;
    for (const Triangle& tr : t.triangles()) {
        // counterclockwise traversal a->b->c under the polygon labeling
        F4 e1 = at(Edge(tr.v[0], tr.v[1]));
        F4 e2 = at(Edge(tr.v[1], tr.v[2]));
        F4 e3 = at(Edge(tr.v[2], tr.v[0]));
        out.emplace(tr, sign_of_color_cycle(e1, e2, e3));
    }
    return out;
}

bool flip_preserves_coloring(const VertexColoring& vc, const FlipRecord& f) {
    return color_at(vc, f.diagonal_after.a) != color_at(vc, f.diagonal_after.b);
}

SignedFlipSequence sign_sequence_from_coloring(const FlipSequence& s, const VertexColoring& vc) {
    auto steps = validate_sequence(s);

    // stepwise: sign T(k), gate flip k on its removed pair, only then look at T(k+1)
    SignedFlipSequence out{s, {}};
    out.step_signs.reserve(steps.size());
    for (size_t k = 0; k < steps.size(); ++k) {
        auto ec = edge_coloring_from_vertices(steps[k], vc);
        out.step_signs.push_back(signs_from_edge_coloring(steps[k], ec));
        if (k < static_cast<size_t>(s.size())) {
            const FlipRecord& f = s.flips[k];
            const auto& signs = out.step_signs.back();
            if (signs.at(f.removed[0]) != signs.at(f.removed[1]))
                throw FlipBlockedAt(static_cast<int>(k) + 1,
                                    "removed triangles have opposite signs under this coloring");
        }
    }

    check_signed_invariants(out);
    return out;
}

}  // namespace sdf
