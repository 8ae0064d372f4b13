#pragma once

#include "alcoved/lattice_core.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace alcoved {

/// A bounded, nonempty, full-dimensional difference-constraint system.
/// Only `validate` and the named constructors produce one.
class AlcovedPolytope {
public:
    const HRep& hrep() const noexcept { return hrep_; }
    std::size_t dim() const noexcept { return hrep_.dim(); }
    /// Per-coordinate extremes, cached at validation.
    const std::vector<Interval>& bounds() const noexcept { return bounds_; }

    friend bool operator==(const AlcovedPolytope& a, const AlcovedPolytope& b) {
        return a.hrep_ == b.hrep_;
    }

private:
    friend AlcovedPolytope validate(const HRep& h);
    HRep hrep_;
    std::vector<Interval> bounds_;
};

/// Throws Infeasible, Unbounded, or NotFullDimensional.
AlcovedPolytope validate(const HRep& h);
AlcovedPolytope validate(std::span<const Constraint> constraints, std::size_t dim);

/// Whether c is irredundant in p. For a full-dimensional difference system
/// that is the same as c defining a facet: the largest x_i - x_j over p
/// without c exceeds the bound of c.
bool is_facet(const AlcovedPolytope& p, const Constraint& c);

/// The facet-defining constraints of p, in canonical order.
std::vector<Constraint> facets(const AlcovedPolytope& p);

/// SplitMix64, the generator behind every seeded construction.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept;
    /// Uniform in [lo, hi] by rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

struct Seed {
    std::uint64_t value = 0;
};

/// Seed of instance `index` in a stream rooted at `base`: the first output of
/// SplitMix64 seeded with base + index.
Seed derive_seed(Seed base, std::uint64_t index) noexcept;

/// {y : y_i - y_j <= 1 for 0 <= i, j <= d}.
AlcovedPolytope make_qd(std::size_t d);

/// The hypersimplex Delta_{d,k} in partial-sum coordinates z_1..z_{d-1}
/// (z_d = k eliminated). Lives in dimension d - 1.
AlcovedPolytope make_hypersimplex(std::size_t d, std::size_t k);

/// Order polytope of a poset on n elements; relation (i, j), 1-based, means
/// p_i precedes p_j and yields x_i <= x_j.
AlcovedPolytope make_order_polytope(std::size_t n,
                                    std::span<const std::pair<std::size_t, std::size_t>> relations);

/// 0 <= x_1 <= x_2 <= ... <= x_d <= scale: the chain order polytope scaled by `scale`.
AlcovedPolytope make_scaled_chain_simplex(std::size_t d, Coord scale);

/// The (d+1)-scaled chain simplex cut by x_1 <= d. Its unique interior lattice
/// point (1, 2, ..., d) sits at lattice distance d - 1 from the cut facet.
AlcovedPolytope make_sharp_distance_example(std::size_t d);

/// The box prod [lo_i, hi_i].
AlcovedPolytope make_box(std::span<const Interval> sides);

/// Random alcoved polytope containing [0,1]^d. Pair bounds x_i - x_j <= c are
/// drawn first over ordered pairs (i, j) in lexicographic order, then the
/// upper bounds x_i <= c, then the lower bounds -x_i <= c.
///   full:  pair c in 1..5, upper in 1..3, lower in 0..2  (inside [-2,3]^d)
///   small: pair c in 1..3, upper in 1..2, lower in 0..1  (inside [-1,2]^d)
AlcovedPolytope random_alcoved(std::size_t d, Seed seed, bool small);

}  // namespace alcoved
