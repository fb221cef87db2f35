#ifndef SIGNEDFLIPS_TYPES_HPP
#define SIGNEDFLIPS_TYPES_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace sdf {

using Vertex = int;

enum class Sign : std::uint8_t { plus, minus };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
Sign sign_from_char(char c);

// undirected edge, endpoints kept sorted
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    Edge() = default;
    Edge(Vertex u, Vertex v);

    bool contains(Vertex x) const { return x == a || x == b; }
    auto operator<=>(const Edge&) const = default;
};

// triangle as a strictly increasing vertex triple
struct Triangle {
    std::array<Vertex, 3> v{};

    Triangle() = default;
    Triangle(Vertex a, Vertex b, Vertex c);

    bool contains(Vertex x) const { return x == v[0] || x == v[1] || x == v[2]; }
    bool has_edge(const Edge& e) const { return contains(e.a) && contains(e.b); }
    Vertex third(const Edge& e) const;  // the vertex not on e
    std::array<Edge, 3> edges() const;
    auto operator<=>(const Triangle&) const = default;
};

struct Tetrahedron {
    std::array<Vertex, 4> v{};

    Tetrahedron() = default;
    Tetrahedron(Vertex a, Vertex b, Vertex c, Vertex d);

    bool contains(Vertex x) const;
    std::array<Triangle, 4> faces() const;
    auto operator<=>(const Tetrahedron&) const = default;
};

std::string to_string(const Edge& e);
std::string to_string(const Triangle& t);
std::string to_string(const Tetrahedron& t);

}  // namespace sdf

#endif
