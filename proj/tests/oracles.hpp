#pragma once

// Independent brute-force references. Nothing here touches the closure or the
// DFS walker: every answer comes from scanning a box point by point.

#include "alcoved/alcoved.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using alcoved::Coord;
using alcoved::HRep;
using alcoved::LatticePoint;

inline bool satisfies(const HRep& h, const LatticePoint& p, Coord slack = 0) {
    for (const auto& c : h.constraints()) {
        const Coord xi = c.i ? p[c.i - 1] : 0;
        const Coord xj = c.j ? p[c.j - 1] : 0;
        if (xi - xj > c.bound - slack) return false;
    }
    return true;
}

inline void for_each_in_box(std::size_t d, Coord lo, Coord hi, const std::function<void(const LatticePoint&)>& f) {
    LatticePoint p(d, lo);
    if (d == 0) {
        f(p);
        return;
    }
    while (true) {
        f(p);
        std::size_t k = 0;
        while (k < d && p[k] == hi) p[k++] = lo;
        if (k == d) return;
        ++p[k];
    }
}

/// Lattice points of h inside [lo, hi]^d, in lexicographic order.
inline std::vector<LatticePoint> box_points(const HRep& h, Coord lo, Coord hi, Coord slack = 0) {
    std::vector<LatticePoint> out;
    for_each_in_box(h.dim(), lo, hi, [&](const LatticePoint& p) {
        if (satisfies(h, p, slack)) out.push_back(p);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t box_count(const HRep& h, Coord lo, Coord hi, Coord slack = 0) {
    std::uint64_t n = 0;
    for_each_in_box(h.dim(), lo, hi, [&](const LatticePoint& p) { n += satisfies(h, p, slack); });
    return n;
}

/// c is irredundant iff loosening it by one admits a new lattice point.
/// Valid for alcoved systems, whose vertices are integral.
inline bool relax_adds_points(const HRep& h, const alcoved::Constraint& c, Coord lo, Coord hi) {
    std::vector<alcoved::Constraint> cs = h.constraints();
    for (auto& x : cs)
        if (x.i == c.i && x.j == c.j) ++x.bound;
    const HRep relaxed = alcoved::canonicalize(cs, h.dim());
    return box_count(relaxed, lo - 1, hi + 1) > box_count(h, lo - 1, hi + 1);
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
