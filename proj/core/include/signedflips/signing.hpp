#ifndef SIGNEDFLIPS_SIGNING_HPP
#define SIGNEDFLIPS_SIGNING_HPP

#include <cstdint>
#include <map>

#include "signedflips/flip_graph.hpp"
#include "signedflips/triangulation.hpp"

namespace sdf {

/// The field with four elements, encoded in two bits: 0, 1, w, w+1 as 0..3.
/// Addition is bitwise xor (so x + x = 0 and sum == difference).
class F4 {
public:
    constexpr F4() = default;
    explicit F4(int value);

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend F4 operator+(F4 x, F4 y) { return F4(x.v_ ^ y.v_); }
    auto operator<=>(const F4&) const = default;

private:
    std::uint8_t v_ = 0;
};

using VertexColoring = std::map<Vertex, F4>;
using EdgeColoring = std::map<Edge, F4>;
using TriangleSigns = std::map<Triangle, Sign>;

bool is_proper(const PolygonTriangulation& t, const VertexColoring& vc);

/// Colors edge {u,v} with colors(u) + colors(v); proper input guarantees the
/// Tait condition (three distinct edge colors around every triangle).
EdgeColoring edge_coloring_from_vertices(const PolygonTriangulation& t, const VertexColoring& vc);

/// + iff (e1,e2,e3) reads the fixed cyclic order (1, w, w+1), - for the
/// reverse; anything else violates the Tait condition.
Sign sign_of_color_cycle(F4 e1, F4 e2, F4 e3);

/// Triangle (a,b,c), a<b<c, read counterclockwise as a->b->c; its sign is the
/// cyclic orientation of the edge colors along that traversal.
TriangleSigns signs_from_edge_coloring(const PolygonTriangulation& t, const EdgeColoring& ec);

/// True iff the coloring stays proper after the flip, i.e. the inserted
/// diagonal's endpoints have different colors.
bool flip_preserves_coloring(const VertexColoring& vc, const FlipRecord& f);

/// Signs every step of s from the vertex coloring. Throws FlipBlockedAt(i)
/// when flip i's removed pair has opposite signs (the coloring does not
/// license that flip); NotProper when some step's edge has equal endpoint colors.
SignedFlipSequence sign_sequence_from_coloring(const FlipSequence& s, const VertexColoring& vc);

}  // namespace sdf

#endif
