#include "alcoved/enumeration.hpp"

#include "alcoved/errors.hpp"

#include <algorithm>
#include <string>

namespace alcoved {

std::size_t PointSet::interior_count() const {
    return static_cast<std::size_t>(std::count(interior_mask.begin(), interior_mask.end(), true));
}

namespace {

// Walks the lattice points of a feasible bounded system coordinate by
// coordinate. For a closed difference system, fixing x_l = v within its
// current interval only adds the edges 0 -> l (v) and l -> 0 (-v); the new
// shortest paths into and out of an unfixed m go through a single fixed node.
class PrefixWalker {
public:
    PrefixWalker(const HRep& h, std::uint64_t budget)
        : closure_(h), d_(h.dim()), budget_(budget), prefix_(d_, 0) {
        for (std::size_t i = 1; i <= d_; ++i)
            if (!closure_.reachable(0, i) || !closure_.reachable(i, 0)) throw Unbounded(i);
    }

    Interval interval(std::size_t m) const {
        // m is 1-based; coordinates 1..m-1 are fixed in prefix_.
        Coord hi = closure_.raw(0, m);
        Coord lo = -closure_.raw(m, 0);
        for (std::size_t l = 1; l < m; ++l) {
            const Coord v = prefix_[l - 1];
            if (closure_.reachable(l, m)) hi = std::min(hi, v + closure_.raw(l, m));
            if (closure_.reachable(m, l)) lo = std::max(lo, v - closure_.raw(m, l));
        }
        return {lo, hi};
    }

    template <typename Leaf>
    void walk(std::size_t m, Leaf&& leaf) {
        if (++visited_ > budget_)
            throw EnumerationBudgetExceeded("enumeration visited more than " + std::to_string(budget_) +
                                            " nodes");
        const Interval iv = interval(m);
        if (m == d_) {
            leaf(iv);
            return;
        }
        for (Coord v = iv.lo; v <= iv.hi; ++v) {
            prefix_[m - 1] = v;
            walk(m + 1, leaf);
        }
    }

    LatticePoint& prefix() { return prefix_; }

private:
    DifferenceClosure closure_;
    std::size_t d_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    LatticePoint prefix_;
};

Integer to_integer(unsigned __int128 v) {
    const auto high = static_cast<unsigned long>(v >> 64);
    const auto low = static_cast<unsigned long>(v);
    Integer r = high;
    r <<= 64;
    r += low;
    return r;
}

}  // namespace

PointSet lattice_points(const HRep& h, EnumerationOptions opts) {
    PointSet out;
    out.dim = h.dim();
    if (h.dim() == 0) throw InvalidArgument("dimension must be positive");
    PrefixWalker walker(h, opts.budget);
    const std::size_t d = h.dim();
    walker.walk(1, [&](Interval last) {
        for (Coord v = last.lo; v <= last.hi; ++v) {
            if (out.points.size() >= opts.budget)
                throw EnumerationBudgetExceeded("more than " + std::to_string(opts.budget) +
                                                " lattice points");
            walker.prefix()[d - 1] = v;
            out.points.push_back(walker.prefix());
            out.interior_mask.push_back(contains(h, walker.prefix(), true));
        }
    });
    return out;
}

PointSet lattice_points(const AlcovedPolytope& p, EnumerationOptions opts) {
    return lattice_points(p.hrep(), opts);
}

Integer count_lattice_points(const HRep& h, EnumerationOptions opts) {
    if (h.dim() == 0) throw InvalidArgument("dimension must be positive");
    unsigned __int128 total = 0;
    PrefixWalker walker(h, opts.budget);
    walker.walk(1, [&](Interval last) {
        if (last.hi >= last.lo) total += static_cast<unsigned __int128>(last.hi - last.lo) + 1;
    });
    return to_integer(total);
}

Integer count_dilate(const AlcovedPolytope& p, std::uint64_t t, EnumerationOptions opts) {
    if (t == 0) return Integer(1);
    return count_lattice_points(dilate(p.hrep(), t), opts);
}

Integer count_interior_dilate(const AlcovedPolytope& p, std::uint64_t t, EnumerationOptions opts) {
    if (t == 0) return Integer(0);
    try {
        return count_lattice_points(interior_system(dilate(p.hrep(), t)), opts);
    } catch (const Infeasible&) {
        return Integer(0);
    }
}

std::vector<LatticePoint> interior_lattice_points(const AlcovedPolytope& p, EnumerationOptions opts) {
    try {
        return lattice_points(interior_system(p.hrep()), opts).points;
    } catch (const Infeasible&) {
        return {};
    }
}

}  // namespace alcoved
