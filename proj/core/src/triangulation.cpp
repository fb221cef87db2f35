#include "signedflips/triangulation.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace sdf {

PolygonTriangulation::PolygonTriangulation(int n, std::vector<Triangle> triangles)
    : n_(n), triangles_(std::move(triangles)) {
    std::sort(triangles_.begin(), triangles_.end());
    triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
    validate();
}

void PolygonTriangulation::validate() const {
    if (n_ < 3) throw Error("polygon needs at least 3 vertices, got " + std::to_string(n_));
    if (static_cast<int>(triangles_.size()) != n_ - 2)
        throw Error("expected " + std::to_string(n_ - 2) + " triangles, got " +
                    std::to_string(triangles_.size()));

    std::map<Edge, int> count;
    for (const Triangle& t : triangles_) {
        if (t.v[0] < 1 || t.v[2] > n_) throw Error("triangle " + to_string(t) + " out of range");
        for (const Edge& e : t.edges()) ++count[e];
    }

    auto boundary = [this](const Edge& e) {
        return e.b - e.a == 1 || (e.a == 1 && e.b == n_);
    };
    for (int i = 1; i <= n_; ++i) {
        Edge e(i, i % n_ + 1);
        auto it = count.find(e);
        if (it == count.end() || it->second != 1)
            throw Error("boundary edge " + to_string(e) + " is not in exactly one triangle");
    }

    std::vector<Edge> diags;
    for (const auto& [e, c] : count) {
        if (boundary(e)) continue;
        if (c != 2) throw Error("diagonal " + to_string(e) + " is in " + std::to_string(c) +
                                " triangles, expected 2");
        diags.push_back(e);
    }
    for (size_t i = 0; i < diags.size(); ++i)
        for (size_t j = i + 1; j < diags.size(); ++j) {
            const Edge &d = diags[i], &f = diags[j];
            bool cross = (d.a < f.a && f.a < d.b && d.b < f.b) ||
                         (f.a < d.a && d.a < f.b && f.b < d.b);
            if (cross) throw Error("diagonals " + to_string(d) + " and " + to_string(f) + " cross");
        }
}

bool PolygonTriangulation::contains(const Triangle& t) const {
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

bool PolygonTriangulation::is_boundary_edge(const Edge& e) const {
    return e.b - e.a == 1 || (e.a == 1 && e.b == n_);
}

std::vector<Edge> PolygonTriangulation::edges() const {
    std::vector<Edge> out;
    for (const Triangle& t : triangles_)
        for (const Edge& e : t.edges()) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> PolygonTriangulation::diagonals() const {
    std::vector<Edge> out;
    for (const Edge& e : edges())
        if (!is_boundary_edge(e)) out.push_back(e);
    return out;
}

bool PolygonTriangulation::is_diagonal(const Edge& e) const {
    if (is_boundary_edge(e)) return false;
    int c = 0;
    for (const Triangle& t : triangles_)
        if (t.has_edge(e)) ++c;
    return c == 2;
}

std::vector<Vertex> PolygonTriangulation::key() const {
    std::vector<Vertex> k;
    k.reserve(triangles_.size() * 3);
    for (const Triangle& t : triangles_) k.insert(k.end(), t.v.begin(), t.v.end());
    return k;
}

PolygonTriangulation fan_triangulation(int n) {
    std::vector<Triangle> tris;
    for (int i = 2; i < n; ++i) tris.emplace_back(1, i, i + 1);
    return PolygonTriangulation(n, std::move(tris));
}

std::pair<PolygonTriangulation, FlipRecord> apply_flip(const PolygonTriangulation& t,
                                                       const Edge& diagonal) {
    std::vector<Triangle> host;
    for (const Triangle& tr : t.triangles())
        if (tr.has_edge(diagonal)) host.push_back(tr);
    if (t.is_boundary_edge(diagonal) || host.size() != 2)
        throw DiagonalNotPresent("edge " + to_string(diagonal) + " is not a diagonal");

    Vertex r = host[0].third(diagonal);
    Vertex s = host[1].third(diagonal);
    Edge after(r, s);

    FlipRecord rec;
    rec.removed = {host[0], host[1]};
    rec.inserted = {Triangle(r, s, diagonal.a), Triangle(r, s, diagonal.b)};
    std::sort(rec.inserted.begin(), rec.inserted.end());
    rec.diagonal_before = diagonal;
    rec.diagonal_after = after;

    std::vector<Triangle> tris;
    tris.reserve(t.triangles().size());
    for (const Triangle& tr : t.triangles())
        if (tr != host[0] && tr != host[1]) tris.push_back(tr);
    tris.push_back(rec.inserted[0]);
    tris.push_back(rec.inserted[1]);

    return {PolygonTriangulation(t.n(), std::move(tris)), rec};
}

FlipSequence make_sequence(const PolygonTriangulation& start, const std::vector<Edge>& diagonals) {
    FlipSequence s{start, {}};
    PolygonTriangulation cur = start;
    for (size_t i = 0; i < diagonals.size(); ++i) {
        auto [next, rec] = apply_flip(cur, diagonals[i]);
        rec.index = static_cast<int>(i) + 1;
        s.flips.push_back(rec);
        cur = std::move(next);
    }
    return s;
}

std::vector<PolygonTriangulation> validate_sequence(const FlipSequence& s) {
    std::vector<PolygonTriangulation> steps{s.start};
    PolygonTriangulation cur = s.start;
    for (size_t i = 0; i < s.flips.size(); ++i) {
        const FlipRecord& f = s.flips[i];
        const int idx = static_cast<int>(i) + 1;
        if (f.index != idx) throw InvalidFlipAt(idx, "index is " + std::to_string(f.index));
        if (!cur.contains(f.removed[0]) || !cur.contains(f.removed[1]))
            throw InvalidFlipAt(idx, "removed pair is not contained in the current triangulation");
        FlipRecord expected;
        try {
            auto [next, rec] = apply_flip(cur, f.diagonal_before);
            expected = rec;
            cur = std::move(next);
        } catch (const DiagonalNotPresent& e) {
            throw InvalidFlipAt(idx, e.what());
        }
        expected.index = idx;
        if (expected != f)
            throw InvalidFlipAt(idx, "record does not match the re-diagonalization of " +
                                         to_string(f.diagonal_before));
        steps.push_back(cur);
    }
    return steps;
}

namespace {

// triangulations of the contiguous sub-polygon lo..hi
using RangeKey = std::pair<int, int>;

const std::vector<std::vector<Triangle>>& tri_range(
    int lo, int hi, std::map<RangeKey, std::vector<std::vector<Triangle>>>& memo) {
    auto it = memo.find({lo, hi});
    if (it != memo.end()) return it->second;

    std::vector<std::vector<Triangle>> out;
    if (hi - lo == 1) {
        out.push_back({});
    } else {
        for (int k = lo + 1; k < hi; ++k) {
            const auto& left = tri_range(lo, k, memo);
            const auto& right = tri_range(k, hi, memo);
            for (const auto& l : left)
                for (const auto& r : right) {
                    std::vector<Triangle> tris = l;
                    tris.insert(tris.end(), r.begin(), r.end());
                    tris.emplace_back(lo, k, hi);
                    out.push_back(std::move(tris));
                }
        }
    }
    return memo.emplace(RangeKey{lo, hi}, std::move(out)).first->second;
}

}  // namespace

std::vector<PolygonTriangulation> enumerate_triangulations(int n) {
    if (n < 3) throw Error("polygon needs at least 3 vertices");
    if (n > 14) throw TooLarge("enumeration is capped at n = 14");
    std::map<RangeKey, std::vector<std::vector<Triangle>>> memo;
    std::vector<PolygonTriangulation> out;
    for (const auto& tris : tri_range(1, n, memo)) out.emplace_back(n, tris);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sdf
