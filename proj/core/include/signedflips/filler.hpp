#ifndef SIGNEDFLIPS_FILLER_HPP
#define SIGNEDFLIPS_FILLER_HPP

#include <map>
#include <vector>

#include "signedflips/flip_graph.hpp"
#include "signedflips/simplicial.hpp"
#include "signedflips/triangulation.hpp"

namespace sdf {

using ColorMap = std::map<Vertex, int>;

/// Triangulates the disk bounded by `cycle` without interior vertices, keeping
/// the strict proper 3-coloring proper on every output edge. The pivot triple
/// is found by scanning from the cycle's lowest-labeled vertex; a unique-colored
/// pivot fans, otherwise the ear (v1,v2,v3) is cut and the rest recurses.
SimplicialComplex fill_disk_2d(const std::vector<Vertex>& cycle, const ColorMap& coloring);

/// Tetrahedralizes the 3-ball bounded by a strictly 4-colored 2-sphere without
/// interior vertices; every output tetrahedron is rainbow. Pivot: region of the
/// lexicographically smallest facet's color set, then the lowest boundary
/// vertex; unique-colored pivots cone, otherwise the link is disk-filled and
/// the smaller sphere recursed. When a pivot's disk filling would degenerate
/// (share faces with the rest of the sphere), the remaining vertices are tried
/// in ascending order.
SimplicialComplex fill_ball_3d(const SimplicialComplex& sphere, const ColorMap& coloring);

/// Same recursion in arbitrary dimension: a strict (n+2)-colored n-sphere is
/// filled to an (n+1)-ball, links being filled one dimension down.
SimplicialComplex fill_ball_nd(const SimplicialComplex& sphere, const ColorMap& coloring);

enum class MoveKind {
    move_i,           // glue along 2 boundary faces: diagonal flip on the sphere
    move_ii,          // glue along 1 face: triangle divided into three
    move_ii_inverse,  // glue along 3 faces: three triangles merged into one
};

const char* to_string(MoveKind k);

struct MoveStep {
    MoveKind kind;
    Tetrahedron tetrahedron;
    std::vector<Triangle> removed;   // boundary faces consumed, sorted
    std::vector<Triangle> inserted;  // boundary faces exposed, sorted
};

struct MoveDecomposition {
    Tetrahedron seed;
    std::vector<MoveStep> steps;
};

/// Orders fill_ball_3d's tetrahedra from a seed so each next one shares at
/// least one face with the current boundary surface and every intermediate
/// surface stays a 2-sphere; classifies each gluing by shared-face count.
/// Throws NoAdmissibleOrder when no such order exists.
MoveDecomposition decompose_to_moves(const SimplicialComplex& sphere, const ColorMap& coloring);

/// Replays a decomposition from the seed tetrahedron, validating every
/// intermediate surface, and returns the final sphere.
SimplicialComplex replay_moves(const MoveDecomposition& d);

/// K(phi): one tetrahedron per flip (the quadrilateral support), glued along
/// shared triangles in sequence order; the gluing graph on flip indices
/// coincides with the flip-interaction graph.
struct FlipComplex {
    std::vector<Tetrahedron> tetrahedra;  // one per flip, in order
    SimplicialComplex complex;            // facets deduplicated and sorted
    FlipInteractionGraph adjacency;
};

FlipComplex complex_from_sequence(const FlipSequence& s);

}  // namespace sdf

#endif
