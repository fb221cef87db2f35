#include "signedflips/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "signedflips/errors.hpp"

namespace sdf {

bool FlipInteractionGraph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

std::vector<int> FlipInteractionGraph::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& [u, v] : edges) {
        if (u == i) out.push_back(v);
        if (v == i) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlipInteractionGraph build_flip_graph(const FlipSequence& s) {
    validate_sequence(s);
    const int k = s.size();
    FlipInteractionGraph g;
    g.order = k;

    auto in_pair = [](const Triangle& t, const std::array<Triangle, 2>& p) {
        return t == p[0] || t == p[1];
    };

    // the definition, evaluated literally: edge {i,j} iff some triangle of
    // Y(i) ∩ X(j) escapes every intermediate X(l)
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            bool edge = false;
            for (const Triangle& t : s.flips[i - 1].inserted) {
                if (!in_pair(t, s.flips[j - 1].removed)) continue;
                bool consumed = false;
                for (int l = i + 1; l < j && !consumed; ++l)
                    consumed = in_pair(t, s.flips[l - 1].removed);
                if (!consumed) {
                    edge = true;
                    break;
                }
            }
            if (edge) g.edges.emplace_back(i, j);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::variant<TwoColoring, OddCycleWitness> two_color(const FlipInteractionGraph& g) {
    std::vector<std::vector<int>> adj(g.order + 1);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> color(g.order + 1, 0), parent(g.order + 1, 0);

    auto witness = [&](int u, int v) {
        // close the odd cycle through the BFS tree: u up to the common
        // ancestor, then down to v; the conflict edge {v,u} wraps around
        std::vector<int> up;
        std::set<int> seen;
        for (int x = u; x != 0; x = parent[x]) {
            up.push_back(x);
            seen.insert(x);
        }
        std::vector<int> down;
        int lca = 0;
        for (int x = v; x != 0; x = parent[x]) {
            if (seen.count(x)) {
                lca = x;
                break;
            }
            down.push_back(x);
        }
        OddCycleWitness w;
        for (int x : up) {
            w.cycle.push_back(x);
            if (x == lca) break;
        }
        for (auto it = down.rbegin(); it != down.rend(); ++it) w.cycle.push_back(*it);
        return w;
    };

    for (int root = 1; root <= g.order; ++root) {
        if (color[root] != 0) continue;
        color[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (color[v] == 0) {
                    color[v] = 3 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return witness(u, v);
                }
            }
        }
    }

    TwoColoring c;
    for (int i = 1; i <= g.order; ++i) c.color[i] = color[i];
    return c;
}

namespace {

void require_proper(const FlipInteractionGraph& g, const TwoColoring& c) {
    for (int i = 1; i <= g.order; ++i) {
        auto it = c.color.find(i);
        if (it == c.color.end() || (it->second != 1 && it->second != 2))
            throw NotAProperColoring("vertex " + std::to_string(i) + " is not colored 1 or 2");
    }
    for (const auto& [u, v] : g.edges)
        if (c.at(u) == c.at(v))
            throw NotAProperColoring("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                     "} is monochromatic");
}

}  // namespace

SignedFlipSequence lift_to_signed(const FlipSequence& s, const TwoColoring& c) {
    auto g = build_flip_graph(s);
    require_proper(g, c);
    auto steps = validate_sequence(s);
    const int k = s.size();

    auto in_pair = [](const Triangle& t, const std::array<Triangle, 2>& p) {
        return t == p[0] || t == p[1];
    };

    SignedFlipSequence out{s, {}};
    out.step_signs.resize(steps.size());

    for (int step = 1; step <= static_cast<int>(steps.size()); ++step) {
        for (const Triangle& t : steps[step - 1].triangles()) {
            int r1 = 0;  // last flip i < step inserting t
            for (int i = step - 1; i >= 1; --i)
                if (in_pair(t, s.flips[i - 1].inserted)) {
                    r1 = i;
                    break;
                }
            int r2 = 0;  // first flip j >= step removing t
            for (int j = step; j <= k; ++j)
                if (in_pair(t, s.flips[j - 1].removed)) {
                    r2 = j;
                    break;
                }

            Sign sign;
            if (r1 != 0) {
                sign = c.at(r1) == 1 ? Sign::plus : Sign::minus;
                if (r2 != 0) {
                    Sign other = c.at(r2) == 1 ? Sign::minus : Sign::plus;
                    if (other != sign)
                        throw RuleConsistencyViolation(
                            "rules R1 and R2 disagree on triangle " + to_string(t) + " at step " +
                            std::to_string(step) + " (R1 via flip " + std::to_string(r1) +
                            ", R2 via flip " + std::to_string(r2) + ")");
                }
            } else if (r2 != 0) {
                sign = c.at(r2) == 1 ? Sign::minus : Sign::plus;
            } else {
                sign = Sign::plus;  // R3
            }
            out.step_signs[step - 1].emplace(t, sign);
        }
    }

    check_signed_invariants(out);
    return out;
}

void check_signed_invariants(const SignedFlipSequence& ss) {
    auto steps = validate_sequence(ss.base);
    if (ss.step_signs.size() != steps.size())
        throw InvalidSignedSequence("expected " + std::to_string(steps.size()) +
                                    " sign maps, got " + std::to_string(ss.step_signs.size()));

    for (size_t k = 0; k < steps.size(); ++k) {
        const auto& signs = ss.step_signs[k];
        const auto& tris = steps[k].triangles();
        if (signs.size() != tris.size())
            throw InvalidSignedSequence("step " + std::to_string(k + 1) +
                                        " signs do not cover the triangulation");
        for (const Triangle& t : tris)
            if (!signs.contains(t))
                throw InvalidSignedSequence("step " + std::to_string(k + 1) + " misses triangle " +
                                            to_string(t));
    }

    for (int i = 1; i <= ss.base.size(); ++i) {
        const FlipRecord& f = ss.base.flips[i - 1];
        const auto& before = ss.step_signs[i - 1];
        const auto& after = ss.step_signs[i];

        Sign s0 = before.at(f.removed[0]);
        if (before.at(f.removed[1]) != s0)
            throw InvalidSignedSequence("flip " + std::to_string(i) +
                                        ": removed pair carries opposite signs");
        if (after.at(f.inserted[0]) != opposite(s0) || after.at(f.inserted[1]) != opposite(s0))
            throw InvalidSignedSequence("flip " + std::to_string(i) +
                                        ": inserted pair is not oppositely signed");

        for (const Triangle& t : steps[i - 1].triangles()) {
            if (t == f.removed[0] || t == f.removed[1]) continue;
            if (after.at(t) != before.at(t))
                throw InvalidSignedSequence("flip " + std::to_string(i) + ": untouched triangle " +
                                            to_string(t) + " changed sign");
        }
    }
}

TwoColoring extract_coloring(const SignedFlipSequence& ss) {
    check_signed_invariants(ss);
    TwoColoring c;
    for (int i = 1; i <= ss.base.size(); ++i) {
        const FlipRecord& f = ss.base.flips[i - 1];
        Sign y = ss.step_signs[i].at(f.inserted[0]);
        c.color[i] = (y == Sign::plus) ? 1 : 2;
    }
    auto g = build_flip_graph(ss.base);
    require_proper(g, c);
    return c;
}

SignabilityResult is_signable(const FlipSequence& s) {
    auto g = build_flip_graph(s);
    auto res = two_color(g);
    if (auto* coloring = std::get_if<TwoColoring>(&res)) {
        SignabilityResult out;
        out.signable = true;
        out.lifted = lift_to_signed(s, *coloring);
        return out;
    }
    SignabilityResult out;
    out.signable = false;
    out.witness = std::get<OddCycleWitness>(res);
    return out;
}

std::string to_dot(const FlipInteractionGraph& g, const TwoColoring* coloring) {
    std::ostringstream os;
    os << "graph G {\n";
    os << "  node [shape=circle];\n";
    for (int i = 1; i <= g.order; ++i) {
        os << "  phi" << i << " [label=\"phi" << i << "\"";
        if (coloring != nullptr) {
            const char* fill = coloring->at(i) == 1 ? "lightblue" : "lightsalmon";
            os << ", style=filled, fillcolor=" << fill;
        }
        os << "];\n";
    }
    for (const auto& [u, v] : g.edges) os << "  phi" << u << " -- phi" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace sdf
