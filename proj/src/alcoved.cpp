#include "alcoved/alcoved.hpp"

#include "alcoved/errors.hpp"

#include <functional>
#include <limits>
#include <string>

namespace alcoved {

AlcovedPolytope validate(const HRep& h) {
    if (h.dim() == 0) throw InvalidArgument("dimension must be positive");
    AlcovedPolytope p;
    p.bounds_ = tight_bounds(h);
    if (!is_full_dimensional(h)) throw NotFullDimensional();
    p.hrep_ = h;
    return p;
}

AlcovedPolytope validate(std::span<const Constraint> constraints, std::size_t dim) {
    return validate(canonicalize(constraints, dim));
}

bool is_facet(const AlcovedPolytope& p, const Constraint& c) {
    const auto own = p.hrep().bound(c.i, c.j);
    if (!own || *own != c.bound) return false;
    const auto without = max_difference_without(p.hrep(), c);
    return !without || *without > c.bound;
}

std::vector<Constraint> facets(const AlcovedPolytope& p) {
    std::vector<Constraint> out;
    for (const auto& c : p.hrep().constraints())
        if (is_facet(p, c)) out.push_back(c);
    return out;
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidArgument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Seed derive_seed(Seed base, std::uint64_t index) noexcept {
    SplitMix64 g(base.value + index);
    return Seed{g.next()};
}

AlcovedPolytope make_qd(std::size_t d) {
    if (d < 1) throw InvalidArgument("Q_d needs d >= 1");
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j)
            if (i != j) cs.push_back({i, j, 1});
    return validate(cs, d);
}

AlcovedPolytope make_hypersimplex(std::size_t d, std::size_t k) {
    if (d < 2 || k < 1 || k + 1 > d)
        throw InvalidArgument("hypersimplex needs d >= 2 and 1 <= k <= d - 1");
    const std::size_t n = d - 1;
    const Coord kk = static_cast<Coord>(k);
    std::vector<Constraint> cs;
    // 0 <= z_i - z_{i-1} <= 1 for i = 1..d-1, with z_0 = 0.
    for (std::size_t i = 1; i <= n; ++i) {
        cs.push_back({i, i - 1, 1});
        cs.push_back({i - 1, i, 0});
    }
    // 0 <= k - z_{d-1} <= 1, i.e. k - 1 <= z_{d-1} <= k.
    cs.push_back({n, 0, kk});
    cs.push_back({0, n, 1 - kk});
    return validate(cs, n);
}

AlcovedPolytope make_order_polytope(std::size_t n,
                                    std::span<const std::pair<std::size_t, std::size_t>> relations) {
    if (n < 1) throw InvalidArgument("order polytope needs n >= 1");
    std::vector<std::vector<std::size_t>> succ(n + 1);
    std::vector<Constraint> cs;
    for (std::size_t i = 1; i <= n; ++i) {
        cs.push_back({i, 0, 1});
        cs.push_back({0, i, 0});
    }
    for (auto [a, b] : relations) {
        if (a < 1 || b < 1 || a > n || b > n)
            throw IndexOutOfRange("relation element outside 1.." + std::to_string(n));
        if (a == b) continue;
        succ[a].push_back(b);
        cs.push_back({a, b, 0});
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int> state(n + 1, 0);
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        state[v] = 1;
        for (auto w : succ[v]) {
            if (state[w] == 1) throw CyclicRelations();
            if (state[w] == 0) visit(w);
        }
        state[v] = 2;
    };
    for (std::size_t v = 1; v <= n; ++v)
        if (state[v] == 0) visit(v);
    return validate(cs, n);
}

AlcovedPolytope make_scaled_chain_simplex(std::size_t d, Coord scale) {
    if (d < 1 || scale < 1) throw InvalidArgument("chain simplex needs d >= 1 and scale >= 1");
    std::vector<Constraint> cs{{0, 1, 0}, {d, 0, scale}};
    for (std::size_t i = 1; i < d; ++i) cs.push_back({i, i + 1, 0});
    return validate(cs, d);
}

AlcovedPolytope make_sharp_distance_example(std::size_t d) {
    if (d < 2) throw InvalidArgument("sharp distance example needs d >= 2");
    std::vector<Constraint> cs = make_scaled_chain_simplex(d, static_cast<Coord>(d) + 1).hrep().constraints();
    cs.push_back({1, 0, static_cast<Coord>(d)});
    return validate(cs, d);
}

AlcovedPolytope make_box(std::span<const Interval> sides) {
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        cs.push_back({i + 1, 0, sides[i].hi});
        cs.push_back({0, i + 1, checked_mul(sides[i].lo, -1)});
    }
    return validate(cs, sides.size());
}

AlcovedPolytope random_alcoved(std::size_t d, Seed seed, bool small) {
    if (d < 2) throw InvalidArgument("random alcoved polytopes need d >= 2");
    const Interval pair = small ? Interval{1, 3} : Interval{1, 5};
    const Interval upper = small ? Interval{1, 2} : Interval{1, 3};
    const Interval lower = small ? Interval{0, 1} : Interval{0, 2};
    SplitMix64 rng(seed.value);
    std::vector<Constraint> cs;
    cs.reserve(d * (d + 1));
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; j <= d; ++j)
            if (i != j) cs.push_back({i, j, rng.uniform(pair.lo, pair.hi)});
    for (std::size_t i = 1; i <= d; ++i) cs.push_back({i, 0, rng.uniform(upper.lo, upper.hi)});
    for (std::size_t i = 1; i <= d; ++i) cs.push_back({0, i, rng.uniform(lower.lo, lower.hi)});
    return validate(cs, d);
}

}  // namespace alcoved
