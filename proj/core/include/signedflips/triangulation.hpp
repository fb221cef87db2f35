#ifndef SIGNEDFLIPS_TRIANGULATION_HPP
#define SIGNEDFLIPS_TRIANGULATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "signedflips/errors.hpp"
#include "signedflips/types.hpp"

namespace sdf {

/// Triangulation of the convex n-gon, vertices labeled 1..n counterclockwise.
/// Stored as a sorted set of canonical triangles; the constructor enforces the
/// four structural invariants (count, boundary/diagonal incidence, non-crossing).
class PolygonTriangulation {
public:
    PolygonTriangulation(int n, std::vector<Triangle> triangles);

    int n() const { return n_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    bool contains(const Triangle& t) const;
    bool is_boundary_edge(const Edge& e) const;
    bool is_diagonal(const Edge& e) const;
    std::vector<Edge> edges() const;      // all edges, sorted
    std::vector<Edge> diagonals() const;  // non-boundary edges, sorted

    // flattened canonical form, usable as a visited-set key
    std::vector<Vertex> key() const;

    auto operator<=>(const PolygonTriangulation&) const = default;

private:
    int n_ = 0;
    std::vector<Triangle> triangles_;

    void validate() const;
};

/// fan from vertex 1: triangles {1, i, i+1}
PolygonTriangulation fan_triangulation(int n);

/// One diagonal flip: removed pair X(i), inserted pair Y(i), both diagonals.
struct FlipRecord {
    int index = 0;                      // 1-based position in the sequence
    std::array<Triangle, 2> removed;    // X(i), sorted pair
    std::array<Triangle, 2> inserted;   // Y(i), sorted pair
    Edge diagonal_before;
    Edge diagonal_after;

    bool operator==(const FlipRecord&) const = default;
};

struct FlipSequence {
    PolygonTriangulation start;
    std::vector<FlipRecord> flips;

    int size() const { return static_cast<int>(flips.size()); }
};

/// Flips `diagonal` inside its quadrilateral. Throws DiagonalNotPresent if the
/// edge is a boundary edge or absent. The returned record has index 0.
std::pair<PolygonTriangulation, FlipRecord> apply_flip(const PolygonTriangulation& t,
                                                       const Edge& diagonal);

/// Builds a sequence by flipping the given diagonals in order (records derived).
FlipSequence make_sequence(const PolygonTriangulation& start, const std::vector<Edge>& diagonals);

/// Replays the sequence and returns T(1), ..., T(k+1).
/// Throws InvalidFlipAt(i) if X(i) is not contained in T(i) or the record is
/// not the re-diagonalization of its own quadrilateral.
std::vector<PolygonTriangulation> validate_sequence(const FlipSequence& s);

/// All triangulations of the n-gon (Catalan(n-2) of them), 3 <= n <= 14.
std::vector<PolygonTriangulation> enumerate_triangulations(int n);

/// Minimal-length flip path from a to b (BFS over the associahedron,
/// neighbors expanded in lexicographic diagonal order).
FlipSequence find_flip_path(const PolygonTriangulation& a, const PolygonTriangulation& b);

/// Shortest flip path from a to b whose flip-interaction graph is bipartite,
/// searched up to max_len flips; nullopt when none exists within the bound.
std::optional<FlipSequence> find_signable_path(const PolygonTriangulation& a,
                                               const PolygonTriangulation& b, int max_len);

}  // namespace sdf

#endif
