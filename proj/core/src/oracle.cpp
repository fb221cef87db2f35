#include "signedflips/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "signedflips/errors.hpp"

namespace sdf {

namespace {

// bit p of a mask is the sign of the p-th triangle (sorted order): 1 = plus
struct StepPlan {
    int x0 = 0, x1 = 0;       // positions of the removed pair in T(k)
    std::vector<int> source;  // per position of T(k+1): old position, or -1 for inserted
};

std::vector<StepPlan> build_plans(const FlipSequence& s,
                                  const std::vector<PolygonTriangulation>& steps) {
    std::vector<StepPlan> plans;
    for (int i = 1; i <= s.size(); ++i) {
        const auto& before = steps[i - 1].triangles();
        const auto& after = steps[i].triangles();
        const FlipRecord& f = s.flips[i - 1];

        auto pos = [](const std::vector<Triangle>& tris, const Triangle& t) {
            return static_cast<int>(std::lower_bound(tris.begin(), tris.end(), t) - tris.begin());
        };

        StepPlan p;
        p.x0 = pos(before, f.removed[0]);
        p.x1 = pos(before, f.removed[1]);
        for (const Triangle& t : after) {
            bool inserted = (t == f.inserted[0] || t == f.inserted[1]);
            p.source.push_back(inserted ? -1 : pos(before, t));
        }
        plans.push_back(std::move(p));
    }
    return plans;
}

// propagation is forced: the removed pair must agree, the inserted pair is opposite
bool step(std::uint32_t mask, const StepPlan& p, std::uint32_t& out) {
    const std::uint32_t s0 = (mask >> p.x0) & 1u;
    if (((mask >> p.x1) & 1u) != s0) return false;
    std::uint32_t next = 0;
    for (size_t q = 0; q < p.source.size(); ++q) {
        std::uint32_t bit = p.source[q] < 0 ? (s0 ^ 1u) : ((mask >> p.source[q]) & 1u);
        next |= bit << q;
    }
    out = next;
    return true;
}

int checked_width(const std::vector<PolygonTriangulation>& steps) {
    int m = static_cast<int>(steps.front().triangles().size());
    if (m > 20) throw TooLarge("start triangulation has more than 20 triangles");
    return m;
}

}  // namespace

bool oracle_signable(const FlipSequence& s) {
    auto steps = validate_sequence(s);
    const int m = checked_width(steps);
    auto plans = build_plans(s, steps);

    std::vector<std::uint32_t> current(1u << m);
    for (std::uint32_t mask = 0; mask < current.size(); ++mask) current[mask] = mask;

    for (const StepPlan& p : plans) {
        std::vector<std::uint32_t> next;
        next.reserve(current.size());
        for (std::uint32_t mask : current) {
            std::uint32_t out;
            if (step(mask, p, out)) next.push_back(out);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
        if (current.empty()) return false;
    }
    return !current.empty();
}

std::vector<SignState> oracle_all_signings(const FlipSequence& s) {
    auto steps = validate_sequence(s);
    const int m = checked_width(steps);
    auto plans = build_plans(s, steps);

    // initial assignments grouped by their (deterministic) current state;
    // merged groups share one propagation
    std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) groups[mask] = {mask};

    for (const StepPlan& p : plans) {
        std::map<std::uint32_t, std::vector<std::uint32_t>> next;
        for (auto& [cur, initials] : groups) {
            std::uint32_t out;
            if (!step(cur, p, out)) continue;
            auto& bucket = next[out];
            bucket.insert(bucket.end(), initials.begin(), initials.end());
        }
        groups = std::move(next);
    }

    std::vector<std::uint32_t> survivors;
    for (const auto& [cur, initials] : groups)
        survivors.insert(survivors.end(), initials.begin(), initials.end());
    std::sort(survivors.begin(), survivors.end());

    const auto& tris = steps.front().triangles();
    std::vector<SignState> out;
    out.reserve(survivors.size());
    for (std::uint32_t mask : survivors) {
        SignState state;
        for (int p = 0; p < m; ++p)
            state.emplace(tris[p], ((mask >> p) & 1u) ? Sign::plus : Sign::minus);
        out.push_back(std::move(state));
    }
    return out;
}

}  // namespace sdf
