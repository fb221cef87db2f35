#include "signedflips/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdf {

Sign sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    throw std::invalid_argument("sign must be '+' or '-'");
}

Edge::Edge(Vertex u, Vertex v) : a(std::min(u, v)), b(std::max(u, v)) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
}

Triangle::Triangle(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw std::invalid_argument("triangle vertices must be distinct");
}

Vertex Triangle::third(const Edge& e) const {
    for (Vertex x : v)
        if (!e.contains(x)) return x;
    throw std::invalid_argument("edge is not an edge of the triangle");
}

std::array<Edge, 3> Triangle::edges() const {
    return {Edge(v[0], v[1]), Edge(v[1], v[2]), Edge(v[0], v[2])};
}

Tetrahedron::Tetrahedron(Vertex a, Vertex b, Vertex c, Vertex d) : v{a, b, c, d} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3])
        throw std::invalid_argument("tetrahedron vertices must be distinct");
}

bool Tetrahedron::contains(Vertex x) const {
    return x == v[0] || x == v[1] || x == v[2] || x == v[3];
}

std::array<Triangle, 4> Tetrahedron::faces() const {
    return {Triangle(v[1], v[2], v[3]), Triangle(v[0], v[2], v[3]),
            Triangle(v[0], v[1], v[3]), Triangle(v[0], v[1], v[2])};
}

std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

std::string to_string(const Triangle& t) {
    return std::to_string(t.v[0]) + std::to_string(t.v[1]) + std::to_string(t.v[2]);
}

std::string to_string(const Tetrahedron& t) {
    return std::to_string(t.v[0]) + std::to_string(t.v[1]) + std::to_string(t.v[2]) +
           std::to_string(t.v[3]);
}

}  // namespace sdf
