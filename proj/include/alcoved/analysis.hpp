#pragma once

#include "alcoved/ehrhart.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alcoved {

struct UnimodalityReport {
    bool unimodal = true;
    std::vector<std::size_t> peak_indices;
    /// First index with a strict increase after a strict decrease.
    std::optional<std::size_t> first_violation;
};

UnimodalityReport is_unimodal(const std::vector<Integer>& v);
inline UnimodalityReport is_unimodal(const HStarVector& v) { return is_unimodal(v.entries); }

struct FacetDistance {
    Constraint facet;
    std::optional<std::int64_t> distance;  // absent without interior points
};

struct DistanceReport {
    std::vector<FacetDistance> per_facet;
    std::optional<std::int64_t> max_distance;
};

/// min over interior lattice points p of bound - (p_i - p_j). Normals of
/// alcove hyperplanes are primitive, so this is the lattice distance.
std::int64_t facet_distance(const AlcovedPolytope& p, const Constraint& c);
std::int64_t facet_distance(const Constraint& c, const std::vector<LatticePoint>& interior);

/// Distances of every facet; never throws on missing interior points.
DistanceReport facet_distances(const AlcovedPolytope& p, EnumerationOptions opts = {});

/// The largest facet distance, bounded by max(1, d - 1) for any alcoved
/// polytope with interior lattice points. Throws NoInteriorPoints, or
/// TheoremViolation if the bound fails.
DistanceReport max_facet_distance(const AlcovedPolytope& p, EnumerationOptions opts = {});
std::int64_t facet_distance_bound(std::size_t d);

/// Every facet at distance exactly 1 from the interior lattice points.
bool main_theorem_hypothesis(const AlcovedPolytope& p, EnumerationOptions opts = {});
bool main_theorem_hypothesis(const DistanceReport& r);

/// One interior lattice point and all facets at distance 1 from it.
bool is_reflexive(const AlcovedPolytope& p, EnumerationOptions opts = {});

/// Smallest k <= k_max with kP reflexive.
std::optional<std::size_t> gorenstein_index(const AlcovedPolytope& p, std::size_t k_max,
                                            EnumerationOptions opts = {});

bool hstar_symmetry(const HStarVector& v);

struct HibiStanleyReport {
    bool ok = true;
    std::vector<std::size_t> reflection_violations;  // h*_i < h*_{d+1-i}
    std::vector<std::size_t> tail_violations;        // h*_i < h*_{i+1} in the tail
    std::vector<std::size_t> binomial_violations;    // h*_i > C(h*_1 + i - 1, i)
};

HibiStanleyReport hibi_stanley_check(const HStarVector& v, std::size_t d);

struct PeakReport {
    std::vector<std::size_t> peak_indices;
    bool at_lower_middle = false;  // ceil((d-1)/2) is a peak
    bool at_upper_middle = false;  // ceil((d+1)/2) is a peak
};

/// Throws NotUnimodal.
PeakReport peak_location(const HStarVector& v, std::size_t d);

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k > n >= 0 and C(n, 0) = 1.
Integer binomial(long n, std::size_t k);

}  // namespace alcoved
