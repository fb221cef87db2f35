#ifndef SIGNEDFLIPS_FLIP_GRAPH_HPP
#define SIGNEDFLIPS_FLIP_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "signedflips/triangulation.hpp"

namespace sdf {

/// Flip-interaction graph: one vertex per flip (1..order); for i < j the edge
/// {i,j} is present iff Y(i) ∩ X(j) is nonempty and not contained in the union
/// of X(l) over the intermediate flips i < l < j.
struct FlipInteractionGraph {
    int order = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted

    bool adjacent(int i, int j) const;
    std::vector<int> neighbors(int i) const;  // ascending
};

struct TwoColoring {
    std::map<int, int> color;  // flip index -> 1 or 2

    int at(int i) const { return color.at(i); }
};

/// Closed odd walk with consecutive (and wrap-around) members adjacent.
struct OddCycleWitness {
    std::vector<int> cycle;
};

/// A flip sequence plus a sign for every triangle of every intermediate
/// triangulation; step_signs[k-1] is keyed exactly by the triangles of T(k).
struct SignedFlipSequence {
    FlipSequence base;
    std::vector<std::map<Triangle, Sign>> step_signs;  // size flips+1
};

FlipInteractionGraph build_flip_graph(const FlipSequence& s);

/// Deterministic: BFS per component from its lowest-index vertex, root color 1,
/// neighbors scanned ascending. Non-bipartite graphs yield an odd-cycle witness
/// closed by the first conflicting BFS edge.
std::variant<TwoColoring, OddCycleWitness> two_color(const FlipInteractionGraph& g);

/// Signs every T(k) by rule R1 (last earlier flip that inserted t), else R2
/// (first flip at or after k that removes t), else R3 (+). When R1 and R2 both
/// apply they must agree; a mismatch throws RuleConsistencyViolation.
SignedFlipSequence lift_to_signed(const FlipSequence& s, const TwoColoring& c);

/// color(i) = 1 iff Y(i)'s triangles are signed + in step i+1.
TwoColoring extract_coloring(const SignedFlipSequence& ss);

/// Verifies the signed-flip rule at every step (removed pair shares a sign,
/// inserted pair carries the opposite, untouched triangles keep theirs).
/// Throws InvalidSignedSequence on the first violation.
void check_signed_invariants(const SignedFlipSequence& ss);

struct SignabilityResult {
    bool signable = false;
    std::optional<SignedFlipSequence> lifted;
    std::optional<OddCycleWitness> witness;
};

SignabilityResult is_signable(const FlipSequence& s);

/// DOT export, vertices phi1..phik; a coloring renders as two fill colors.
std::string to_dot(const FlipInteractionGraph& g, const TwoColoring* coloring = nullptr);

}  // namespace sdf

#endif
