#ifndef SIGNEDFLIPS_TESTS_SUPPORT_HPP
#define SIGNEDFLIPS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "signedflips/filler.hpp"
#include "signedflips/simplicial.hpp"
#include "signedflips/triangulation.hpp"

namespace support {

inline sdf::PolygonTriangulation heptagon_start() {
    return sdf::PolygonTriangulation(7, {{1, 2, 7}, {2, 3, 6}, {2, 6, 7}, {3, 4, 5}, {3, 5, 6}});
}

inline sdf::FlipSequence example1() {
    return sdf::make_sequence(heptagon_start(),
                              {{3, 6}, {3, 5}, {2, 6}, {2, 7}, {2, 5}});
}

inline sdf::FlipSequence example2() {
    return sdf::make_sequence(heptagon_start(),
                              {{2, 7}, {2, 6}, {3, 6}, {3, 5}, {1, 3}, {1, 6}});
}

// independent of the enumeration: the plain convolution recurrence
inline std::uint64_t catalan_number(int m) {
    std::vector<std::uint64_t> c(m + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[m];
}

// random unsigned flip sequence: uniform start, uniform diagonal each step
inline sdf::FlipSequence random_flip_sequence(std::mt19937& rng,
                                              const std::vector<sdf::PolygonTriangulation>& pool,
                                              int max_len) {
    std::uniform_int_distribution<size_t> start_dist(0, pool.size() - 1);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    sdf::PolygonTriangulation start = pool[start_dist(rng)];
    sdf::PolygonTriangulation cur = start;
    std::vector<sdf::Edge> diagonals;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        auto diags = cur.diagonals();
        if (diags.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, diags.size() - 1);
        sdf::Edge d = diags[pick(rng)];
        diagonals.push_back(d);
        cur = sdf::apply_flip(cur, d).first;
    }
    return sdf::make_sequence(start, diagonals);
}

inline sdf::SimplicialComplex tetrahedron_boundary() {
    return sdf::make_complex(2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

inline sdf::SimplicialComplex octahedron() {
    return sdf::make_complex(2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5},
                                 {2, 3, 6}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}

inline sdf::ColorMap octahedron_coloring() {
    return {{1, 0}, {2, 1}, {3, 2}, {4, 2}, {5, 1}, {6, 3}};
}

/// Random strictly 4-colored 2-sphere grown from the tetrahedron boundary by
/// diagonal flips that keep the coloring proper (move I) and by triangle
/// subdivisions whose new vertex takes the unique missing color (move II).
inline sdf::SimplicialComplex random_colored_sphere(std::mt19937& rng, int max_vertices,
                                                    int steps, sdf::ColorMap& coloring) {
    std::set<std::vector<sdf::Vertex>> facets = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    coloring = {{1, 0}, {2, 1}, {3, 2}, {4, 3}};
    int next_vertex = 5;

    auto has_edge = [&facets](sdf::Vertex a, sdf::Vertex b) {
        for (const auto& f : facets)
            if (std::binary_search(f.begin(), f.end(), a) &&
                std::binary_search(f.begin(), f.end(), b))
                return true;
        return false;
    };

    for (int s = 0; s < steps; ++s) {
        std::uniform_int_distribution<int> coin(0, 1);
        bool try_flip = coin(rng) == 1 || next_vertex > max_vertices;

        if (try_flip) {
            // collect flippable edges
            struct Flip {
                std::vector<sdf::Vertex> f1, f2, n1, n2;
            };
            std::vector<Flip> options;
            std::vector<std::vector<sdf::Vertex>> flist(facets.begin(), facets.end());
            for (size_t i = 0; i < flist.size(); ++i)
                for (size_t j = i + 1; j < flist.size(); ++j) {
                    std::vector<sdf::Vertex> shared;
                    std::set_intersection(flist[i].begin(), flist[i].end(), flist[j].begin(),
                                          flist[j].end(), std::back_inserter(shared));
                    if (shared.size() != 2) continue;
                    sdf::Vertex x = 0, y = 0;
                    for (sdf::Vertex v : flist[i])
                        if (v != shared[0] && v != shared[1]) x = v;
                    for (sdf::Vertex v : flist[j])
                        if (v != shared[0] && v != shared[1]) y = v;
                    if (coloring[x] == coloring[y]) continue;
                    if (has_edge(x, y)) continue;
                    std::vector<sdf::Vertex> n1{x, y, shared[0]}, n2{x, y, shared[1]};
                    std::sort(n1.begin(), n1.end());
                    std::sort(n2.begin(), n2.end());
                    if (facets.count(n1) || facets.count(n2)) continue;
                    options.push_back({flist[i], flist[j], n1, n2});
                }
            if (!options.empty()) {
                std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
                const Flip& f = options[pick(rng)];
                facets.erase(f.f1);
                facets.erase(f.f2);
                facets.insert(f.n1);
                facets.insert(f.n2);
                continue;
            }
        }
        if (next_vertex > max_vertices) continue;

        // subdivide a random triangle; the new vertex takes the missing color
        std::vector<std::vector<sdf::Vertex>> flist(facets.begin(), facets.end());
        std::uniform_int_distribution<size_t> pick(0, flist.size() - 1);
        auto f = flist[pick(rng)];
        int missing = 0 + 1 + 2 + 3 - coloring[f[0]] - coloring[f[1]] - coloring[f[2]];
        sdf::Vertex v = next_vertex++;
        coloring[v] = missing;
        facets.erase(f);
        for (int omit = 0; omit < 3; ++omit) {
            std::vector<sdf::Vertex> g;
            for (int i = 0; i < 3; ++i)
                if (i != omit) g.push_back(f[i]);
            g.push_back(v);
            std::sort(g.begin(), g.end());
            facets.insert(g);
        }
    }

    return sdf::make_complex(2, {facets.begin(), facets.end()});
}

}  // namespace support

#endif
