#pragma once

#include "alcoved/alcoved.hpp"

#include <cstdint>
#include <vector>

namespace alcoved {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct EnumerationOptions {
    /// Cap on emitted points (lattice_points) or visited search nodes (counting).
    std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Lattice points in lexicographic order with a parallel interior mask.
struct PointSet {
    std::size_t dim = 0;
    std::vector<LatticePoint> points;
    std::vector<bool> interior_mask;

    std::size_t size() const noexcept { return points.size(); }
    std::size_t interior_count() const;
};

/// Depth-first enumeration over x_1, ..., x_d. After each prefix is fixed the
/// next coordinate's interval is read off the shortest-path closure of the
/// system, so every branch reaches at least one point.
PointSet lattice_points(const HRep& h, EnumerationOptions opts = {});
PointSet lattice_points(const AlcovedPolytope& p, EnumerationOptions opts = {});

/// |tP cap Z^d|. The innermost coordinate is counted by interval length.
Integer count_lattice_points(const HRep& h, EnumerationOptions opts = {});
Integer count_dilate(const AlcovedPolytope& p, std::uint64_t t, EnumerationOptions opts = {});

/// |int(tP) cap Z^d|.
Integer count_interior_dilate(const AlcovedPolytope& p, std::uint64_t t, EnumerationOptions opts = {});

std::vector<LatticePoint> interior_lattice_points(const AlcovedPolytope& p, EnumerationOptions opts = {});

}  // namespace alcoved
