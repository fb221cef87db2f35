#include "signedflips/filler.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sdf {

namespace {

int color_at(const ColorMap& coloring, Vertex v) {
    auto it = coloring.find(v);
    if (it == coloring.end()) throw NotProper("vertex " + std::to_string(v) + " is uncolored");
    return it->second;
}

std::set<int> colors_used(const ColorMap& coloring, const std::vector<Vertex>& vs) {
    std::set<int> out;
    for (Vertex v : vs) out.insert(color_at(coloring, v));
    return out;
}

void fill_disk_rec(std::vector<Vertex> cyc, const ColorMap& coloring, std::vector<Facet>& out) {
    const int m = static_cast<int>(cyc.size());
    if (m == 3) {
        out.push_back({cyc[0], cyc[1], cyc[2]});
        std::sort(out.back().begin(), out.back().end());
        return;
    }

    // scan from the lowest-labeled vertex for the first triple of distinct colors
    auto lowest = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), lowest, cyc.end());

    for (int i = 0; i < m; ++i) {
        Vertex v1 = cyc[i], v2 = cyc[(i + 1) % m], v3 = cyc[(i + 2) % m];
        int c1 = color_at(coloring, v1), c2 = color_at(coloring, v2), c3 = color_at(coloring, v3);
        if (c1 == c2 || c2 == c3 || c1 == c3) continue;

        bool unique = true;
        for (Vertex w : cyc)
            if (w != v2 && color_at(coloring, w) == c2) unique = false;

        if (unique) {
            // fan: v2 sees every other vertex
            for (int j = 1; j < m - 1; ++j) {
                Facet f{v2, cyc[(i + 1 + j) % m], cyc[(i + 2 + j) % m]};
                std::sort(f.begin(), f.end());
                out.push_back(std::move(f));
            }
        } else {
            // cut the ear (v1,v2,v3) and recurse on the cycle without v2
            Facet f{v1, v2, v3};
            std::sort(f.begin(), f.end());
            out.push_back(std::move(f));
            cyc.erase(cyc.begin() + (i + 1) % m);
            fill_disk_rec(std::move(cyc), coloring, out);
        }
        return;
    }
    throw NotStrict("no three consecutive vertices with distinct colors");
}

}  // namespace

SimplicialComplex fill_disk_2d(const std::vector<Vertex>& cycle, const ColorMap& coloring) {
    if (cycle.size() < 3)
        throw DegenerateCycle("cycle has " + std::to_string(cycle.size()) + " vertices");
    {
        std::set<Vertex> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) throw DegenerateCycle("cycle repeats a vertex");
    }
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i)
        if (color_at(coloring, cycle[i]) == color_at(coloring, cycle[(i + 1) % m]))
            throw NotProper("adjacent cycle vertices " + std::to_string(cycle[i]) + "," +
                            std::to_string(cycle[(i + 1) % m]) + " share a color");
    if (colors_used(coloring, cycle).size() != 3)
        throw NotStrict("a strict 3-coloring must use exactly 3 colors");

    std::vector<Facet> out;
    fill_disk_rec(cycle, coloring, out);
    return make_complex(2, std::move(out));
}

namespace {

void require_proper_complex(const SimplicialComplex& k, const ColorMap& coloring) {
    for (const Edge& e : complex_edges(k))
        if (color_at(coloring, e.a) == color_at(coloring, e.b))
            throw NotProper("edge " + to_string(e) + " has equal endpoint colors");
}

void require_strict(const SimplicialComplex& k, const ColorMap& coloring, int want) {
    auto used = colors_used(coloring, complex_vertices(k));
    if (static_cast<int>(used.size()) != want)
        throw NotStrict("expected exactly " + std::to_string(want) + " colors, found " +
                        std::to_string(used.size()));
}

bool color_unique(const SimplicialComplex& k, const ColorMap& coloring, Vertex v) {
    int c = color_at(coloring, v);
    for (Vertex w : complex_vertices(k))
        if (w != v && color_at(coloring, w) == c) return false;
    return true;
}

SimplicialComplex cone_over(const SimplicialComplex& sphere, Vertex apex) {
    std::vector<Facet> out;
    for (const Facet& f : sphere.facets) {
        if (std::binary_search(f.begin(), f.end(), apex)) continue;
        Facet g = f;
        g.push_back(apex);
        std::sort(g.begin(), g.end());
        out.push_back(std::move(g));
    }
    return make_complex(sphere.dim + 1, std::move(out));
}

// pivot vertex for the filling recursion: region of facets sharing the
// lexicographically smallest facet's color set; its boundary ridges expose a
// vertex whose link sees exactly n+1 colors
Vertex pick_pivot(const SimplicialComplex& sphere, const ColorMap& coloring) {
    for (const Facet& f : sphere.facets) {
        std::set<int> fc = colors_used(coloring, f);
        std::vector<Facet> region;
        for (const Facet& g : sphere.facets)
            if (colors_used(coloring, g) == fc) region.push_back(g);

        std::map<Facet, int> ridge_in_region;
        for (const Facet& g : region) {
            for (size_t omit = 0; omit < g.size(); ++omit) {
                Facet r;
                for (size_t i = 0; i < g.size(); ++i)
                    if (i != omit) r.push_back(g[i]);
                ++ridge_in_region[r];
            }
        }
        Vertex best = -1;
        for (const auto& [r, c] : ridge_in_region) {
            if (c != 1) continue;
            for (Vertex v : r)
                if (best < 0 || v < best) best = v;
        }
        if (best >= 0) return best;
    }
    throw NotStrict("no color-class region with boundary; coloring is not strict");
}

SimplicialComplex replace_star(const SimplicialComplex& sphere, Vertex v,
                               const SimplicialComplex& disk) {
    std::vector<Facet> kept;
    for (const Facet& f : sphere.facets)
        if (!std::binary_search(f.begin(), f.end(), v)) kept.push_back(f);
    std::vector<Facet> out = kept;
    for (const Facet& f : disk.facets) {
        if (std::binary_search(kept.begin(), kept.end(), f))
            throw NotASphere("link filling collides with an existing facet");
        out.push_back(f);
    }
    return make_complex(sphere.dim, std::move(out));
}

}  // namespace

SimplicialComplex fill_ball_nd(const SimplicialComplex& sphere, const ColorMap& coloring) {
    const int n = sphere.dim;
    if (n < 1) throw NotASphere("filling starts at 1-dimensional spheres");
    if (n == 1) return fill_disk_2d(cycle_vertices(sphere), coloring);

    require_sphere(sphere);
    require_proper_complex(sphere, coloring);
    require_strict(sphere, coloring, n + 2);

    // candidate pivots: the region-rule vertex first, then every vertex in
    // ascending order. A candidate is rejected when its link-filling disk
    // would share a facet with the rest of the sphere (a degenerate gluing
    // the recursion cannot absorb); the next candidate is tried instead.
    std::vector<Vertex> candidates{pick_pivot(sphere, coloring)};
    for (Vertex v : complex_vertices(sphere))
        if (v != candidates.front()) candidates.push_back(v);

    for (Vertex v : candidates) {
        if (color_unique(sphere, coloring, v)) return cone_over(sphere, v);

        auto link = vertex_link(sphere, v);
        if (colors_used(coloring, complex_vertices(link)).size() !=
            static_cast<size_t>(n + 1))
            continue;

        SimplicialComplex disk;
        try {
            disk = fill_ball_nd(link, coloring);
        } catch (const Error&) {
            continue;
        }

        std::vector<Facet> kept;
        for (const Facet& f : sphere.facets)
            if (!std::binary_search(f.begin(), f.end(), v)) kept.push_back(f);

        // the remainder IS the disk: the sphere is star(v) glued onto the
        // disk, so coning v over it already fills the ball
        if (kept == disk.facets) return cone_over(sphere, v);

        bool collision = false;
        for (const Facet& f : disk.facets)
            if (std::binary_search(kept.begin(), kept.end(), f)) collision = true;
        if (collision) continue;

        auto smaller = replace_star(sphere, v, disk);
        // interior faces of the disk may still coincide with faces of the
        // remainder (e.g. a chord that is already an edge of the sphere);
        // such gluings do not produce a sphere and the candidate is skipped
        if (!is_sphere(smaller)) continue;

        SimplicialComplex inner;
        try {
            inner = fill_ball_nd(smaller, coloring);
        } catch (const Error&) {
            continue;
        }

        std::vector<Facet> out = inner.facets;
        for (const Facet& f : disk.facets) {
            Facet g = f;
            g.push_back(v);
            std::sort(g.begin(), g.end());
            out.push_back(std::move(g));
        }
        return make_complex(n + 1, std::move(out));
    }
    throw Error("ball filling: every pivot candidate leads to a degenerate gluing");
}

SimplicialComplex fill_ball_3d(const SimplicialComplex& sphere, const ColorMap& coloring) {
    if (sphere.dim != 2) throw NotASphere("expected a 2-sphere");
    return fill_ball_nd(sphere, coloring);
}

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::move_i: return "I";
        case MoveKind::move_ii: return "II";
        case MoveKind::move_ii_inverse: return "II_inverse";
    }
    return "?";
}

namespace {

std::set<Triangle> facet_triangles(const Facet& tetra) {
    Tetrahedron t(tetra[0], tetra[1], tetra[2], tetra[3]);
    auto fs = t.faces();
    return {fs.begin(), fs.end()};
}

SimplicialComplex surface_complex(const std::set<Triangle>& surface) {
    std::vector<Facet> fs;
    for (const Triangle& t : surface) fs.push_back({t.v[0], t.v[1], t.v[2]});
    return make_complex(2, std::move(fs));
}

}  // namespace

MoveDecomposition decompose_to_moves(const SimplicialComplex& sphere, const ColorMap& coloring) {
    auto ball = fill_ball_3d(sphere, coloring);

    MoveDecomposition out;
    const Facet& seed = ball.facets.front();
    out.seed = Tetrahedron(seed[0], seed[1], seed[2], seed[3]);

    std::set<Triangle> surface = facet_triangles(seed);
    std::vector<char> used(ball.facets.size(), 0);
    used[0] = 1;
    size_t placed = 1;

    while (placed < ball.facets.size()) {
        bool glued = false;
        for (size_t i = 0; i < ball.facets.size() && !glued; ++i) {
            if (used[i]) continue;
            auto faces = facet_triangles(ball.facets[i]);
            std::vector<Triangle> shared, fresh;
            for (const Triangle& f : faces)
                (surface.count(f) ? shared : fresh).push_back(f);
            if (shared.empty()) continue;

            std::set<Triangle> next = surface;
            for (const Triangle& f : shared) next.erase(f);
            for (const Triangle& f : fresh) next.insert(f);
            if (!is_sphere(surface_complex(next))) continue;

            MoveStep step;
            step.tetrahedron = Tetrahedron(ball.facets[i][0], ball.facets[i][1],
                                           ball.facets[i][2], ball.facets[i][3]);
            step.removed = shared;
            step.inserted = fresh;
            switch (shared.size()) {
                case 1: step.kind = MoveKind::move_ii; break;
                case 2: step.kind = MoveKind::move_i; break;
                case 3: step.kind = MoveKind::move_ii_inverse; break;
                default:
                    throw NoAdmissibleOrder("tetrahedron shares all four faces with the surface");
            }
            out.steps.push_back(std::move(step));
            surface = std::move(next);
            used[i] = 1;
            ++placed;
            glued = true;
        }
        if (!glued) throw NoAdmissibleOrder("no unused tetrahedron can be glued to the surface");
    }
    return out;
}

SimplicialComplex replay_moves(const MoveDecomposition& d) {
    std::set<Triangle> surface;
    for (const Triangle& f : d.seed.faces()) surface.insert(f);
    require_sphere(surface_complex(surface));

    for (size_t i = 0; i < d.steps.size(); ++i) {
        const MoveStep& step = d.steps[i];
        auto faces = facet_triangles({step.tetrahedron.v[0], step.tetrahedron.v[1],
                                      step.tetrahedron.v[2], step.tetrahedron.v[3]});
        auto expect = [&](size_t removed, size_t inserted) {
            if (step.removed.size() != removed || step.inserted.size() != inserted)
                throw NoAdmissibleOrder("move " + std::to_string(i + 1) +
                                        " has the wrong removed/inserted counts for its kind");
        };
        switch (step.kind) {
            case MoveKind::move_i: expect(2, 2); break;
            case MoveKind::move_ii: expect(1, 3); break;
            case MoveKind::move_ii_inverse: expect(3, 1); break;
        }
        for (const Triangle& f : step.removed) {
            if (!faces.count(f) || !surface.count(f))
                throw NoAdmissibleOrder("move " + std::to_string(i + 1) + " removes " +
                                        to_string(f) + " which is not a glueable face");
            surface.erase(f);
        }
        for (const Triangle& f : step.inserted) {
            if (!faces.count(f) || surface.count(f))
                throw NoAdmissibleOrder("move " + std::to_string(i + 1) + " inserts " +
                                        to_string(f) + " which is not a fresh face");
            surface.insert(f);
        }
        require_sphere(surface_complex(surface));
    }
    return surface_complex(surface);
}

FlipComplex complex_from_sequence(const FlipSequence& s) {
    validate_sequence(s);

    FlipComplex out;
    out.adjacency.order = s.size();

    // gluing simulation: a triangle's provider is the flip that most recently
    // inserted it and has not yet had it consumed
    std::map<Triangle, int> provider;
    std::set<std::pair<int, int>> edges;
    for (int j = 1; j <= s.size(); ++j) {
        const FlipRecord& f = s.flips[j - 1];
        std::set<Vertex> support;
        for (const Triangle& t : f.removed) support.insert(t.v.begin(), t.v.end());
        std::vector<Vertex> sv(support.begin(), support.end());
        out.tetrahedra.emplace_back(sv[0], sv[1], sv[2], sv[3]);

        for (const Triangle& t : f.removed) {
            auto it = provider.find(t);
            if (it != provider.end()) {
                edges.emplace(it->second, j);
                provider.erase(it);
            }
        }
        for (const Triangle& t : f.inserted) provider[t] = j;
    }
    out.adjacency.edges.assign(edges.begin(), edges.end());

    std::vector<Facet> facets;
    for (const Tetrahedron& t : out.tetrahedra) facets.push_back({t.v[0], t.v[1], t.v[2], t.v[3]});
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    out.complex = make_complex(3, std::move(facets));
    return out;
}

}  // namespace sdf
