#include "signedflips/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace sdf {

namespace {

std::string facet_str(const Facet& f) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "]";
    return os.str();
}

// all (d+1)-subsets of a facet, each sorted because the facet is
std::vector<Facet> subfaces(const Facet& f, int d) {
    std::vector<Facet> out;
    const int n = static_cast<int>(f.size());
    const int k = d + 1;
    if (k > n || k <= 0) return out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Facet face(k);
        for (int i = 0; i < k; ++i) face[i] = f[pick[i]];
        out.push_back(std::move(face));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::map<Facet, int> ridge_counts(const SimplicialComplex& k) {
    std::map<Facet, int> count;
    for (const Facet& f : k.facets)
        for (const Facet& r : subfaces(f, k.dim - 1)) ++count[r];
    return count;
}

bool facet_connected(const SimplicialComplex& k) {
    if (k.facets.size() <= 1) return true;
    std::map<Facet, std::vector<size_t>> by_ridge;
    for (size_t i = 0; i < k.facets.size(); ++i)
        for (const Facet& r : subfaces(k.facets[i], k.dim - 1)) by_ridge[r].push_back(i);

    std::vector<char> seen(k.facets.size(), 0);
    std::deque<size_t> queue{0};
    seen[0] = 1;
    size_t visited = 1;
    while (!queue.empty()) {
        size_t i = queue.front();
        queue.pop_front();
        for (const Facet& r : subfaces(k.facets[i], k.dim - 1))
            for (size_t j : by_ridge[r])
                if (!seen[j]) {
                    seen[j] = 1;
                    ++visited;
                    queue.push_back(j);
                }
    }
    return visited == k.facets.size();
}

std::vector<Vertex> walk_cycle(const std::vector<Edge>& edges, const std::string& who) {
    auto fail = [&who](const std::string& msg) -> std::vector<Vertex> {
        throw NonCycleLink(who + ": " + msg);
    };
    if (edges.size() < 3) return fail("fewer than 3 edges");
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& [v, nb] : adj) {
        if (nb.size() != 2) return fail("vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(nb.size()));
        std::sort(nb.begin(), nb.end());
    }
    Vertex start = adj.begin()->first;
    std::vector<Vertex> cycle{start, adj[start][0]};
    while (true) {
        Vertex prev = cycle[cycle.size() - 2];
        Vertex cur = cycle.back();
        Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (next == start) break;
        cycle.push_back(next);
        if (cycle.size() > edges.size()) return fail("walk does not close");
    }
    if (cycle.size() != adj.size()) return fail("not a single cycle");
    return cycle;
}

}  // namespace

bool SimplicialComplex::has_facet(const Facet& f) const {
    return std::binary_search(facets.begin(), facets.end(), f);
}

SimplicialComplex make_complex(int dim, std::vector<Facet> facets) {
    if (dim < 0) throw Error("complex dimension must be nonnegative");
    for (Facet& f : facets) {
        std::sort(f.begin(), f.end());
        if (static_cast<int>(f.size()) != dim + 1)
            throw Error("facet " + facet_str(f) + " has wrong size for dimension " +
                        std::to_string(dim));
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error("facet " + facet_str(f) + " repeats a vertex");
    }
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
        throw Error("duplicate facet in complex");
    return SimplicialComplex{dim, std::move(facets)};
}

std::vector<Vertex> complex_vertices(const SimplicialComplex& k) {
    std::set<Vertex> vs;
    for (const Facet& f : k.facets) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

std::vector<Facet> faces_of_dim(const SimplicialComplex& k, int d) {
    std::set<Facet> out;
    for (const Facet& f : k.facets)
        for (Facet& s : subfaces(f, d)) out.insert(std::move(s));
    return {out.begin(), out.end()};
}

std::vector<Edge> complex_edges(const SimplicialComplex& k) {
    std::vector<Edge> out;
    for (const Facet& f : faces_of_dim(k, 1)) out.emplace_back(f[0], f[1]);
    return out;
}

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
    std::vector<Facet> boundary;
    for (const auto& [r, c] : ridge_counts(k))
        if (c == 1) boundary.push_back(r);
    return make_complex(k.dim - 1, std::move(boundary));
}

SimplicialComplex vertex_link(const SimplicialComplex& k, Vertex v) {
    std::vector<Facet> link;
    for (const Facet& f : k.facets) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        Facet g;
        for (Vertex x : f)
            if (x != v) g.push_back(x);
        link.push_back(std::move(g));
    }
    return make_complex(k.dim - 1, std::move(link));
}

std::vector<Vertex> cycle_vertices(const SimplicialComplex& k) {
    if (k.dim != 1) throw NotASphere("expected a 1-dimensional complex");
    std::vector<Edge> edges;
    for (const Facet& f : k.facets) edges.emplace_back(f[0], f[1]);
    try {
        return walk_cycle(edges, "complex");
    } catch (const NonCycleLink& e) {
        throw NotASphere(e.what());
    }
}

std::vector<Vertex> link_cycle(const SimplicialComplex& sphere, Vertex v) {
    auto link = vertex_link(sphere, v);
    std::vector<Edge> edges;
    for (const Facet& f : link.facets) edges.emplace_back(f[0], f[1]);
    return walk_cycle(edges, "link of " + std::to_string(v));
}

namespace {

bool sphere_check(const SimplicialComplex& k, std::string* why) {
    auto fail = [why](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (k.facets.empty()) return fail("empty complex");

    if (k.dim == 0)
        return k.facets.size() == 2 || fail("a 0-sphere has exactly two vertices");

    for (const auto& [r, c] : ridge_counts(k))
        if (c != 2)
            return fail("face " + facet_str(r) + " lies in " + std::to_string(c) +
                        " facets, expected 2");
    if (!facet_connected(k)) return fail("complex is not connected");

    const long V = static_cast<long>(complex_vertices(k).size());
    if (k.dim == 1) {
        // closed connected 1-manifold: a single cycle
        return V == static_cast<long>(k.facets.size()) || fail("not a single cycle");
    }
    if (k.dim == 2) {
        const long E = static_cast<long>(faces_of_dim(k, 1).size());
        const long F = static_cast<long>(k.facets.size());
        if (V - E + F != 2) return fail("Euler characteristic is not 2");
        for (Vertex v : complex_vertices(k)) {
            try {
                link_cycle(k, v);
            } catch (const NonCycleLink& e) {
                return fail(e.what());
            }
        }
        return true;
    }
    if (k.dim == 3) {
        const long E = static_cast<long>(faces_of_dim(k, 1).size());
        const long F = static_cast<long>(faces_of_dim(k, 2).size());
        const long T = static_cast<long>(k.facets.size());
        if (V - E + F - T != 0) return fail("Euler characteristic is not 0");
        for (Vertex v : complex_vertices(k)) {
            std::string sub;
            if (!sphere_check(vertex_link(k, v), &sub))
                return fail("link of " + std::to_string(v) + ": " + sub);
        }
        return true;
    }
    // higher dimensions: purity and ridge incidence only
    return true;
}

}  // namespace

bool is_sphere(const SimplicialComplex& k) { return sphere_check(k, nullptr); }

void require_sphere(const SimplicialComplex& k) {
    std::string why;
    if (!sphere_check(k, &why)) throw NotASphere(why);
}

long euler_characteristic_full(const SimplicialComplex& k) {
    long chi = 0;
    for (int d = 0; d <= k.dim; ++d) {
        long count = static_cast<long>(faces_of_dim(k, d).size());
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

std::map<Facet, std::array<Vertex, 3>> orient_closed_surface(const SimplicialComplex& sphere) {
    if (sphere.dim != 2) throw NotASphere("orientation needs a 2-complex");
    std::map<Facet, std::array<Vertex, 3>> orient;
    if (sphere.facets.empty()) return orient;

    std::map<Edge, std::vector<Facet>> by_edge;
    for (const Facet& f : sphere.facets) {
        by_edge[Edge(f[0], f[1])].push_back(f);
        by_edge[Edge(f[1], f[2])].push_back(f);
        by_edge[Edge(f[0], f[2])].push_back(f);
    }

    auto directed_edges = [](const std::array<Vertex, 3>& o) {
        return std::array<std::pair<Vertex, Vertex>, 3>{
            std::pair{o[0], o[1]}, {o[1], o[2]}, {o[2], o[0]}};
    };

    orient[sphere.facets.front()] = {sphere.facets.front()[0], sphere.facets.front()[1],
                                     sphere.facets.front()[2]};
    std::deque<Facet> queue{sphere.facets.front()};
    while (!queue.empty()) {
        Facet f = queue.front();
        queue.pop_front();
        auto of = orient.at(f);
        for (auto [u, v] : directed_edges(of)) {
            for (const Facet& g : by_edge.at(Edge(u, v))) {
                if (g == f) continue;
                Vertex w = 0;
                for (Vertex x : g)
                    if (x != u && x != v) w = x;
                std::array<Vertex, 3> og{v, u, w};  // reversed shared edge
                auto it = orient.find(g);
                if (it == orient.end()) {
                    orient[g] = og;
                    queue.push_back(g);
                } else {
                    // both orientations of g induce a direction on {u,v};
                    // consistency means g must traverse v before u
                    bool ok = false;
                    for (auto [p, q] : directed_edges(it->second))
                        if (p == v && q == u) ok = true;
                    if (!ok) throw NotASphere("surface is not orientable");
                }
            }
        }
    }
    if (orient.size() != sphere.facets.size()) throw NotASphere("surface is not connected");
    return orient;
}

int induced_face_sign(const Facet& tetra, int tetra_parity, const Facet& face) {
    int missing = -1;
    for (int i = 0; i < 4; ++i)
        if (!std::binary_search(face.begin(), face.end(), tetra[i])) missing = i;
    if (missing < 0) throw Error("face is not a face of the tetrahedron");
    int s = (missing % 2 == 0) ? 1 : -1;
    return s * tetra_parity;
}

std::map<Facet, int> orient_ball_3d(const SimplicialComplex& ball) {
    if (ball.dim != 3) throw Error("orientation needs a 3-complex");
    std::map<Facet, int> parity;
    if (ball.facets.empty()) return parity;

    std::map<Facet, std::vector<Facet>> by_face;
    for (const Facet& t : ball.facets)
        for (const Facet& f : subfaces(t, 2)) by_face[f].push_back(t);

    parity[ball.facets.front()] = 1;
    std::deque<Facet> queue{ball.facets.front()};
    while (!queue.empty()) {
        Facet t = queue.front();
        queue.pop_front();
        int p = parity.at(t);
        for (const Facet& f : subfaces(t, 2)) {
            for (const Facet& u : by_face.at(f)) {
                if (u == t) continue;
                // adjacent tetrahedra induce opposite orientations on the shared face
                int want = -induced_face_sign(t, p, f);
                int up = want * induced_face_sign(u, 1, f);
                auto it = parity.find(u);
                if (it == parity.end()) {
                    parity[u] = up;
                    queue.push_back(u);
                } else if (it->second != up) {
                    throw Error("3-complex is not orientable");
                }
            }
        }
    }
    if (parity.size() != ball.facets.size()) throw Error("3-complex is not face-connected");
    return parity;
}

}  // namespace sdf
