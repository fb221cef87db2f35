#include <algorithm>
#include <deque>
#include <unordered_map>

#include "signedflips/flip_graph.hpp"
#include "signedflips/triangulation.hpp"

namespace sdf {

namespace {

struct KeyHash {
    size_t operator()(const std::vector<Vertex>& k) const noexcept {
        size_t h = 0xcbf29ce484222325ull;
        for (Vertex v : k) {
            h ^= static_cast<size_t>(v);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

}  // namespace

FlipSequence find_flip_path(const PolygonTriangulation& a, const PolygonTriangulation& b) {
    if (a.n() != b.n())
        throw DimensionMismatch("polygon sizes differ: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
    if (a == b) return {a, {}};

    struct Parent {
        std::vector<Vertex> from;
        Edge via;
    };
    std::unordered_map<std::vector<Vertex>, Parent, KeyHash> parent;
    const auto target = b.key();

    std::deque<PolygonTriangulation> queue{a};
    parent.emplace(a.key(), Parent{{}, Edge{}});

    while (!queue.empty()) {
        PolygonTriangulation cur = std::move(queue.front());
        queue.pop_front();
        for (const Edge& d : cur.diagonals()) {
            auto [next, rec] = apply_flip(cur, d);
            auto key = next.key();
            if (parent.contains(key)) continue;
            parent.emplace(key, Parent{cur.key(), d});
            if (key == target) {
                std::vector<Edge> path;
                for (auto k = key; k != a.key();) {
                    const Parent& p = parent.at(k);
                    path.push_back(p.via);
                    k = p.from;
                }
                std::reverse(path.begin(), path.end());
                return make_sequence(a, path);
            }
            queue.push_back(std::move(next));
        }
    }
    throw Error("flip graph of the polygon is connected; unreachable");
}

namespace {

bool bipartite(const FlipInteractionGraph& g) {
    return std::holds_alternative<TwoColoring>(two_color(g));
}

// wrong-diagonal count is a lower bound on the flips still needed
int diagonal_gap(const PolygonTriangulation& cur, const std::vector<Edge>& target_diags) {
    int gap = 0;
    for (const Edge& d : cur.diagonals())
        if (!std::binary_search(target_diags.begin(), target_diags.end(), d)) ++gap;
    return gap;
}

bool signable_dfs(const PolygonTriangulation& cur, const PolygonTriangulation& target,
                  const std::vector<Edge>& target_diags, FlipSequence& seq, int remaining) {
    if (diagonal_gap(cur, target_diags) > remaining) return false;
    if (remaining == 0) return cur == target;
    for (const Edge& d : cur.diagonals()) {
        auto [next, rec] = apply_flip(cur, d);
        rec.index = seq.size() + 1;
        seq.flips.push_back(rec);
        // any prefix whose graph already has an odd cycle can never recover:
        // later flips only append vertices, so the odd cycle stays induced
        if (bipartite(build_flip_graph(seq)) &&
            signable_dfs(next, target, target_diags, seq, remaining - 1))
            return true;
        seq.flips.pop_back();
    }
    return false;
}

}  // namespace

std::optional<FlipSequence> find_signable_path(const PolygonTriangulation& a,
                                               const PolygonTriangulation& b, int max_len) {
    if (a.n() != b.n())
        throw DimensionMismatch("polygon sizes differ: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
    auto target_diags = b.diagonals();
    for (int depth = 0; depth <= max_len; ++depth) {
        FlipSequence seq{a, {}};
        if (signable_dfs(a, b, target_diags, seq, depth)) return seq;
    }
    return std::nullopt;
}

}  // namespace sdf
