#ifndef SIGNEDFLIPS_SIMPLICIAL_HPP
#define SIGNEDFLIPS_SIMPLICIAL_HPP

#include <array>
#include <map>
#include <vector>

#include "signedflips/errors.hpp"
#include "signedflips/types.hpp"

namespace sdf {

using Facet = std::vector<Vertex>;  // strictly increasing

/// Pure abstract simplicial complex described by its facet list.
struct SimplicialComplex {
    int dim = 0;
    std::vector<Facet> facets;  // sorted, unique, each of size dim+1

    bool has_facet(const Facet& f) const;
};

/// Normalizes (sorts facets and the list) and rejects duplicated facets,
/// repeated vertices, or size mismatches.
SimplicialComplex make_complex(int dim, std::vector<Facet> facets);

std::vector<Vertex> complex_vertices(const SimplicialComplex& k);
std::vector<Facet> faces_of_dim(const SimplicialComplex& k, int d);
std::vector<Edge> complex_edges(const SimplicialComplex& k);

/// (dim-1)-faces lying in exactly one facet, as a (dim-1)-complex.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

/// link of v: facets containing v, with v removed
SimplicialComplex vertex_link(const SimplicialComplex& k, Vertex v);

/// Sphere checks per dimension: cycles for dim 1; closed surface with
/// Euler characteristic 2 and cycle links for dim 2; for dim 3, closed,
/// connected, zero Euler characteristic and 2-sphere links; for higher
/// dimensions only purity, ridge incidence and connectivity.
bool is_sphere(const SimplicialComplex& k);
void require_sphere(const SimplicialComplex& k);  // throws NotASphere

/// Vertices of a 1-complex that is a single simple cycle, starting at the
/// lowest label and heading toward its smaller neighbor. Throws NotASphere.
std::vector<Vertex> cycle_vertices(const SimplicialComplex& k);

/// Same walk applied to the link of v inside a 2-complex; throws NonCycleLink
/// when the link is not a single simple cycle.
std::vector<Vertex> link_cycle(const SimplicialComplex& sphere, Vertex v);

/// Alternating face-count sum over all faces of all dimensions (spheres: 1+(-1)^dim; balls: 1).
long euler_characteristic_full(const SimplicialComplex& k);

/// Consistent orientation of a closed surface: lexicographically smallest
/// facet keeps its sorted order, the rest follow by edge reversal.
std::map<Facet, std::array<Vertex, 3>> orient_closed_surface(const SimplicialComplex& sphere);

/// Consistent orientation of a 3-dim complex whose dual graph is connected:
/// +1/-1 per tetrahedron relative to its sorted vertex order, smallest facet +1.
std::map<Facet, int> orient_ball_3d(const SimplicialComplex& ball);

/// Sign of oriented face f induced by tetrahedron owner (parity relative to
/// sorted order): +1 keeps f sorted, -1 swaps the last two vertices.
int induced_face_sign(const Facet& tetra, int tetra_parity, const Facet& face);

}  // namespace sdf

#endif
