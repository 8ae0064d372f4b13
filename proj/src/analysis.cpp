#include "alcoved/analysis.hpp"

#include "alcoved/errors.hpp"

#include <algorithm>
#include <limits>

namespace alcoved {

UnimodalityReport is_unimodal(const std::vector<Integer>& v) {
    if (v.empty()) throw EmptyList();
    UnimodalityReport r;
    const Integer& peak = *std::max_element(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == peak) r.peak_indices.push_back(i);
    bool descending = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) {
            descending = true;
        } else if (v[i] > v[i - 1] && descending) {
            r.unimodal = false;
            r.first_violation = i;
            break;
        }
    }
    return r;
}

std::int64_t facet_distance(const Constraint& c, const std::vector<LatticePoint>& interior) {
    if (interior.empty()) throw NoInteriorPoints();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : interior) best = std::min(best, checked_add(c.bound, -c.lhs(p)));
    return best;
}

std::int64_t facet_distance(const AlcovedPolytope& p, const Constraint& c) {
    if (!is_facet(p, c)) throw NotAFacet(c.to_string() + " is not facet-defining");
    return facet_distance(c, interior_lattice_points(p));
}

DistanceReport facet_distances(const AlcovedPolytope& p, EnumerationOptions opts) {
    const auto interior = interior_lattice_points(p, opts);
    DistanceReport r;
    for (const auto& c : facets(p)) {
        FacetDistance fd{c, std::nullopt};
        if (!interior.empty()) {
            fd.distance = facet_distance(c, interior);
            r.max_distance = std::max(r.max_distance.value_or(0), *fd.distance);
        }
        r.per_facet.push_back(fd);
    }
    return r;
}

std::int64_t facet_distance_bound(std::size_t d) {
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(d) - 1);
}

DistanceReport max_facet_distance(const AlcovedPolytope& p, EnumerationOptions opts) {
    DistanceReport r = facet_distances(p, opts);
    if (!r.max_distance) throw NoInteriorPoints();
    if (*r.max_distance > facet_distance_bound(p.dim())) {
        std::string dump = "facet distance " + std::to_string(*r.max_distance) + " exceeds " +
                           std::to_string(facet_distance_bound(p.dim())) + " in dimension " +
                           std::to_string(p.dim()) + "; constraints:";
        for (const auto& c : p.hrep().constraints()) dump += " [" + c.to_string() + "]";
        throw TheoremViolation(dump);
    }
    return r;
}

bool main_theorem_hypothesis(const DistanceReport& r) {
    if (!r.max_distance) return false;
    return std::all_of(r.per_facet.begin(), r.per_facet.end(),
                       [](const FacetDistance& f) { return f.distance && *f.distance == 1; });
}

bool main_theorem_hypothesis(const AlcovedPolytope& p, EnumerationOptions opts) {
    return main_theorem_hypothesis(facet_distances(p, opts));
}

bool is_reflexive(const AlcovedPolytope& p, EnumerationOptions opts) {
    const auto interior = interior_lattice_points(p, opts);
    if (interior.size() != 1) return false;
    for (const auto& c : facets(p))
        if (facet_distance(c, interior) != 1) return false;
    return true;
}

std::optional<std::size_t> gorenstein_index(const AlcovedPolytope& p, std::size_t k_max,
                                            EnumerationOptions opts) {
    if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
    for (std::size_t k = 1; k <= k_max; ++k)
        if (is_reflexive(validate(dilate(p.hrep(), k)), opts)) return k;
    return std::nullopt;
}

bool hstar_symmetry(const HStarVector& v) {
    return std::equal(v.entries.begin(), v.entries.end(), v.entries.rbegin());
}

Integer binomial(long n, std::size_t k) {
    if (k == 0) return 1;
    if (n < 0) throw InvalidArgument("binomial with negative upper index");
    if (static_cast<unsigned long>(n) < k) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
    return r;
}

HibiStanleyReport hibi_stanley_check(const HStarVector& v, std::size_t d) {
    if (v.size() != d + 1) throw DimensionMismatch("h*-vector length does not match d + 1");
    HibiStanleyReport r;
    const std::size_t half = (d + 1) / 2;
    for (std::size_t i = 1; i <= half; ++i)
        if (v[i] < v[d + 1 - i]) r.reflection_violations.push_back(i);
    for (std::size_t i = half; i + 1 <= d; ++i)
        if (v[i] < v[i + 1]) r.tail_violations.push_back(i);
    const long h1 = v[1].get_si();
    for (std::size_t i = 0; i <= d; ++i)
        if (v[i] > binomial(h1 + static_cast<long>(i) - 1, i)) r.binomial_violations.push_back(i);
    r.ok = r.reflection_violations.empty() && r.tail_violations.empty() && r.binomial_violations.empty();
    return r;
}

PeakReport peak_location(const HStarVector& v, std::size_t d) {
    const auto u = is_unimodal(v);
    if (!u.unimodal) throw NotUnimodal();
    PeakReport r;
    r.peak_indices = u.peak_indices;
    const std::size_t lower = d / 2;        // ceil((d-1)/2)
    const std::size_t upper = (d + 2) / 2;  // ceil((d+1)/2)
    auto has = [&](std::size_t k) {
        return std::find(r.peak_indices.begin(), r.peak_indices.end(), k) != r.peak_indices.end();
    };
    r.at_lower_middle = has(lower);
    r.at_upper_middle = has(upper);
    return r;
}

}  // namespace alcoved
