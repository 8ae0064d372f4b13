#pragma once

// Exact primitives and the difference-constraint system x_i - x_j <= k
// (with the virtual coordinate x_0 = 0) that describes every alcoved polytope.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alcoved {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coordinates and constraint bounds. Everything that can be enumerated fits
/// comfortably in 64 bits; arithmetic on them is overflow-checked.
using Coord = std::int64_t;
using LatticePoint = std::vector<Coord>;

/// x_i - x_j <= bound, indices in 0..d, x_0 = 0.
struct Constraint {
    std::size_t i = 0;
    std::size_t j = 0;
    Coord bound = 0;

    friend auto operator<=>(const Constraint&, const Constraint&) = default;
    friend bool operator==(const Constraint&, const Constraint&) = default;

    /// The value of x_i - x_j at p.
    Coord lhs(std::span<const Coord> p) const;
    Rational lhs(std::span<const Rational> p) const;
    std::string to_string() const;
};

/// Canonical difference-constraint system: at most one constraint per ordered
/// pair (i, j), sorted by (i, j).
class HRep {
public:
    HRep() = default;

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    std::optional<Coord> bound(std::size_t i, std::size_t j) const;

    friend bool operator==(const HRep&, const HRep&) = default;

private:
    friend HRep canonicalize(std::span<const Constraint>, std::size_t);
    std::size_t dim_ = 0;
    std::vector<Constraint> constraints_;
};

HRep canonicalize(std::span<const Constraint> constraints, std::size_t dim);

struct Interval {
    Coord lo = 0;
    Coord hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// All-pairs shortest paths of the constraint graph (edge j -> i with weight
/// k for every x_i - x_j <= k). `at(u, v)` is the tightest implied bound on
/// x_v - x_u, absent when none is implied.
class DifferenceClosure {
public:
    /// Throws Infeasible on a negative cycle.
    explicit DifferenceClosure(const HRep& h);

    std::size_t nodes() const noexcept { return n_; }
    std::optional<Coord> at(std::size_t u, std::size_t v) const {
        return reach_[u * n_ + v] ? std::optional<Coord>(dist_[u * n_ + v]) : std::nullopt;
    }
    bool reachable(std::size_t u, std::size_t v) const { return reach_[u * n_ + v]; }
    Coord raw(std::size_t u, std::size_t v) const { return dist_[u * n_ + v]; }

private:
    std::size_t n_;
    std::vector<Coord> dist_;
    std::vector<char> reach_;
};

/// Coordinate-wise extremes [lo_i, hi_i] for i = 1..d (returned 0-based).
/// Throws Infeasible or Unbounded(i).
std::vector<Interval> tight_bounds(const HRep& h);

/// Whether the open system x_i - x_j < k is feasible.
bool is_full_dimensional(const HRep& h);

bool contains(const HRep& h, std::span<const Coord> p, bool strict = false);
bool contains(const HRep& h, std::span<const Rational> p, bool strict = false);

/// tP: every bound multiplied by t.
HRep dilate(const HRep& h, std::uint64_t t);

/// h with every bound lowered by one; its lattice points are the interior
/// lattice points of h.
HRep interior_system(const HRep& h);

/// Largest value of x_i - x_j over h with constraint `skip` removed; absent if
/// unbounded. Equivalently, the shortest j -> i path avoiding that edge.
std::optional<Coord> max_difference_without(const HRep& h, const Constraint& skip);

Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

}  // namespace alcoved
