// acceptance suite: one line per criterion, nonzero exit if any fails.
// every tolerance and time budget is pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "signedflips/filler.hpp"
#include "signedflips/flip_graph.hpp"
#include "signedflips/json_io.hpp"
#include "signedflips/oracle.hpp"
#include "signedflips/signing.hpp"
#include "signedflips/triangulation.hpp"
#include "support.hpp"

using namespace sdf;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::string& detail)> body;  // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

using EdgeList = std::vector<std::pair<int, int>>;

// ---- criterion 1 & 2: the paper examples ---------------------------------

void criterion_example1(std::string& detail) {
    auto s = support::example1();
    auto g = build_flip_graph(s);
    require(g.edges == EdgeList{{1, 2}, {1, 3}, {2, 5}, {3, 4}, {4, 5}},
            "graph edges differ from the expected 5-cycle");

    auto res = is_signable(s);
    require(!res.signable, "example 1 must not be signable");
    require(res.witness.has_value() && res.witness->cycle.size() == 5,
            "odd-cycle witness must have length 5");
    for (size_t i = 0; i < 5; ++i)
        require(g.adjacent(res.witness->cycle[i], res.witness->cycle[(i + 1) % 5]),
                "witness cycle is not a closed walk");

    require(oracle_signable(s) == false, "oracle disagrees");
    detail = "5-cycle graph, witness length 5, oracle agrees";
}

void criterion_example2(std::string& detail) {
    auto s = support::example2();
    auto g = build_flip_graph(s);
    require(g.edges == EdgeList{{1, 2}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 5}},
            "graph edges differ from the expected 7-edge graph");

    auto res = two_color(g);
    auto* c = std::get_if<TwoColoring>(&res);
    require(c != nullptr, "graph must be bipartite");
    for (int i : {1, 3, 5}) require(c->at(i) == 1, "vertex " + std::to_string(i) + " not in class 1");
    for (int i : {2, 4, 6}) require(c->at(i) == 2, "vertex " + std::to_string(i) + " not in class 2");

    auto sig = is_signable(s);
    require(sig.signable, "example 2 must be signable");
    check_signed_invariants(*sig.lifted);

    require(oracle_signable(s) == true, "oracle disagrees");
    detail = "7-edge graph, bipartition {1,3,5}/{2,4,6}, lift valid, oracle agrees";
}

// ---- criterion 3 & 4: theorem equivalence at desk scale ------------------

int g_checked = 0;
int g_lifted = 0;

void check_agreement(const FlipSequence& s) {
    auto res = is_signable(s);
    bool brute = oracle_signable(s);
    require(res.signable == brute,
            "disagreement on a sequence of " + std::to_string(s.size()) + " flips");
    if (res.signable) {
        check_signed_invariants(*res.lifted);  // includes the R1/R2 dual-rule assertion
        ++g_lifted;
    }
    ++g_checked;
}

void all_sequences_rec(const PolygonTriangulation& start, FlipSequence& seq,
                       const PolygonTriangulation& cur, int remaining) {
    check_agreement(seq);
    if (remaining == 0) return;
    for (const Edge& d : cur.diagonals()) {
        auto [next, rec] = apply_flip(cur, d);
        rec.index = seq.size() + 1;
        seq.flips.push_back(rec);
        all_sequences_rec(start, seq, next, remaining - 1);
        seq.flips.pop_back();
    }
}

void criterion_equivalence(std::string& detail) {
    g_checked = g_lifted = 0;

    for (const auto& start : enumerate_triangulations(6)) {
        FlipSequence seq{start, {}};
        all_sequences_rec(start, seq, start, 4);
    }
    const int exhaustive = g_checked;

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> n_dist(3, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = n_dist(rng);
        auto pool = enumerate_triangulations(n);
        check_agreement(support::random_flip_sequence(rng, pool, 8));
    }

    std::ostringstream os;
    os << exhaustive << " exhaustive + 1000 random sequences, 0 disagreements";
    detail = os.str();
}

void criterion_rule_consistency(std::string& detail) {
    // the dual-rule assertion lives inside lift_to_signed and throws
    // RuleConsistencyViolation; criterion 3 already exercised it
    require(g_lifted > 0, "criterion 3 must run first and lift some sequences");
    detail = std::to_string(g_lifted) + " lifted sequences, no R1/R2 mismatch";
}

// ---- criterion 5: Catalan ------------------------------------------------

void criterion_catalan(std::string& detail) {
    for (int n = 3; n <= 12; ++n) {
        auto count = enumerate_triangulations(n).size();
        require(count == support::catalan_number(n - 2),
                "count mismatch at n = " + std::to_string(n));
    }
    detail = "n = 3..12 counts equal Catalan(n-2)";
}

// ---- criterion 6: disk filling -------------------------------------------

void criterion_disk(std::string& detail) {
    long fillings = 0;
    for (int m = 3; m <= 10; ++m) {
        std::vector<Vertex> cycle(m);
        for (int i = 0; i < m; ++i) cycle[i] = i + 1;

        std::vector<int> colors(m, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == m) {
                for (int j = 0; j < m; ++j)
                    if (colors[j] == colors[(j + 1) % m]) return;
                if (std::set<int>(colors.begin(), colors.end()).size() != 3) return;
                ColorMap col;
                for (int j = 0; j < m; ++j) col[cycle[j]] = colors[j];

                auto disk = fill_disk_2d(cycle, col);
                require(disk.facets.size() == static_cast<size_t>(m - 2), "wrong triangle count");
                std::set<Vertex> cyc(cycle.begin(), cycle.end());
                for (Vertex v : complex_vertices(disk))
                    require(cyc.count(v) == 1, "new vertex introduced");

                std::map<Edge, int> count;
                for (const Facet& f : disk.facets) {
                    ++count[Edge(f[0], f[1])];
                    ++count[Edge(f[1], f[2])];
                    ++count[Edge(f[0], f[2])];
                }
                std::set<Edge> boundary;
                for (int j = 0; j < m; ++j) boundary.insert(Edge(cycle[j], cycle[(j + 1) % m]));
                for (const auto& [e, c] : count) {
                    require(col.at(e.a) != col.at(e.b), "monochromatic edge");
                    require(c == (boundary.count(e) ? 1 : 2), "edge incidence violated");
                }
                for (const Edge& e : boundary)
                    require(count.count(e) == 1, "boundary edge missing");
                ++fillings;
                return;
            }
            for (int c = 0; c < 3; ++c) {
                colors[i] = c;
                rec(i + 1);
            }
        };
        rec(0);
    }
    detail = std::to_string(fillings) + " strict colorings of cycles up to length 10";
}

// ---- criterion 7 & 8: ball filling and moves -----------------------------

std::vector<std::pair<SimplicialComplex, ColorMap>> g_sphere_inputs;

void criterion_ball(std::string& detail) {
    g_sphere_inputs.clear();
    g_sphere_inputs.emplace_back(support::tetrahedron_boundary(),
                                 ColorMap{{1, 0}, {2, 1}, {3, 2}, {4, 3}});
    g_sphere_inputs.emplace_back(support::octahedron(), support::octahedron_coloring());

    std::mt19937 rng(98765);
    std::uniform_int_distribution<int> steps_dist(1, 10);
    for (int i = 0; i < 50; ++i) {
        ColorMap col;
        auto sphere = support::random_colored_sphere(rng, 12, steps_dist(rng), col);
        g_sphere_inputs.emplace_back(std::move(sphere), std::move(col));
    }

    for (const auto& [sphere, col] : g_sphere_inputs) {
        auto ball = fill_ball_3d(sphere, col);
        require(boundary_complex(ball).facets == sphere.facets,
                "boundary of the ball differs from the sphere");
        for (const Facet& t : ball.facets) {
            std::set<int> cs;
            for (Vertex v : t) cs.insert(col.at(v));
            require(cs.size() == 4, "non-rainbow tetrahedron");
        }
        std::set<Vertex> sv;
        for (Vertex v : complex_vertices(sphere)) sv.insert(v);
        for (Vertex v : complex_vertices(ball))
            require(sv.count(v) == 1, "interior vertex introduced");
    }
    detail = std::to_string(g_sphere_inputs.size()) + " spheres filled, 0 failures";
}

void criterion_moves(std::string& detail) {
    require(!g_sphere_inputs.empty(), "criterion 7 must run first");
    int inverse_moves = 0, total_moves = 0;
    for (const auto& [sphere, col] : g_sphere_inputs) {
        auto d = decompose_to_moves(sphere, col);
        for (const MoveStep& s : d.steps) {
            ++total_moves;
            if (s.kind == MoveKind::move_ii_inverse) ++inverse_moves;
        }
        auto replayed = replay_moves(d);
        require(replayed.facets == sphere.facets, "replay does not reconstruct the sphere");
    }
    std::ostringstream os;
    os << g_sphere_inputs.size() << " decompositions replayed; " << total_moves << " moves, "
       << inverse_moves << " of kind II_inverse";
    detail = os.str();
}

// ---- criterion 9: K(phi) -------------------------------------------------

void criterion_complex(std::string& detail) {
    auto check = [](const FlipSequence& s) {
        auto kc = complex_from_sequence(s);
        require(kc.adjacency.edges == build_flip_graph(s).edges,
                "tetrahedron adjacency differs from the interaction graph");
    };
    check(support::example1());
    check(support::example2());

    std::mt19937 rng(24680);
    std::uniform_int_distribution<int> n_dist(4, 8);
    for (int trial = 0; trial < 200; ++trial) {
        auto pool = enumerate_triangulations(n_dist(rng));
        check(support::random_flip_sequence(rng, pool, 8));
    }
    detail = "both examples + 200 random sequences match";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"example 1 reproduction (graph, witness, oracle)", 1.0, criterion_example1},
        {"example 2 reproduction (graph, bipartition, lift, oracle)", 1.0, criterion_example2},
        {"graph criterion == brute-force oracle at desk scale", 60.0, criterion_equivalence},
        {"R1/R2 dual-rule consistency across all lifts", 60.0, criterion_rule_consistency},
        {"triangulation counts match the Catalan recurrence, n <= 12", 30.0, criterion_catalan},
        {"disk filling for every strict 3-colored cycle, length <= 10", 60.0, criterion_disk},
        {"ball filling: tetrahedron, octahedron, 50 random spheres", 120.0, criterion_ball},
        {"moves decomposition replays back to the sphere", 120.0, criterion_moves},
        {"K(phi) adjacency equals the interaction graph", 60.0, criterion_complex},
    };

    bool all_pass = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        std::string failure;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(detail);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < c.budget_seconds;
        bool pass = failure.empty() && in_budget;
        all_pass = all_pass && pass;

        std::printf("[%s] %zu. %s — %s (%.2fs of %.0fs)\n", pass ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), failure.empty() ? detail.c_str() : failure.c_str(), elapsed,
                    c.budget_seconds);
        if (!in_budget && failure.empty()) std::printf("       exceeded the time budget\n");
    }
    return all_pass ? 0 : 1;
}
