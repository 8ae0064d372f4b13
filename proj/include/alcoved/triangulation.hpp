#pragma once

#include "alcoved/alcoved.hpp"
#include "alcoved/enumeration.hpp"
#include "alcoved/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alcoved {

/// A full-dimensional lattice simplex; vertices sorted lexicographically.
struct Simplex {
    std::vector<LatticePoint> vertices;

    std::size_t dim() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

Simplex make_simplex(std::vector<LatticePoint> vertices);

struct Triangulation {
    std::size_t dim = 0;
    std::vector<Simplex> maximal_simplices;  // sorted, duplicate-free
    std::vector<LatticePoint> vertex_set;    // sorted, duplicate-free
};

/// f_{-1}, f_0, ..., f_d.
struct FVector {
    std::vector<std::int64_t> f;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// h_0, ..., h_{d+1}.
struct HVector {
    std::vector<std::int64_t> h;
    friend bool operator==(const HVector&, const HVector&) = default;
};

/// Exact determinant of an integer square matrix (Bareiss elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

/// Signed determinant of the edge vectors v_k - v_0. Works for a k-simplex
/// in dimension k only.
Integer edge_determinant(const Simplex& s);

/// |det| == 1. Throws DegenerateSimplex when det == 0.
bool is_unimodular(const Simplex& s);

struct TriangulationOptions {
    std::uint64_t cell_budget = kDefaultEnumerationBudget;
    std::uint64_t candidate_budget = kDefaultEnumerationBudget;
    EnumerationOptions enumeration{};
};

/// Cells conv{b, b + e_s(1), ..., b + 1} (b a lattice point, s a permutation)
/// whose vertices all lie in p.
Triangulation alcove_triangulation(const AlcovedPolytope& p, TriangulationOptions opts = {});

FVector f_vector(const Triangulation& t);
HVector h_vector(const FVector& f, std::size_t d);
inline HVector h_vector(const Triangulation& t) { return h_vector(f_vector(t), t.dim); }

/// Raised when a facet sits at lattice distance >= 2 from the interior
/// lattice points, where no boundary-compatible unimodular triangulation exists.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(Constraint facet, std::int64_t distance);
    const Constraint& facet() const noexcept { return facet_; }
    std::int64_t distance() const noexcept { return distance_; }

private:
    Constraint facet_;
    std::int64_t distance_;
};

/// Regular triangulation of P cap Z^d for the height (b, a) compared
/// lexicographically: b = 0 on interior and 1 on boundary lattice points,
/// a(x) = sum x_i^2 + sum_{i<j} (x_i - x_j)^2. Cells are found by testing
/// every (d+1)-subset of lattice points.
Triangulation boundary_compatible_triangulation(const AlcovedPolytope& p, TriangulationOptions opts = {});

struct FacetCoverage {
    Constraint facet;
    std::vector<Simplex> simplices;  // (d-1)-faces of T inside this facet
    std::int64_t covered_volume = 0; // sum of lattice-normalized (d-1)-volumes
    std::int64_t facet_volume = 0;   // normalized volume of the facet itself
};

struct BoundaryComplexReport {
    std::vector<FacetCoverage> facets;
    /// Proper faces all of whose vertices are boundary points but which lie in no facet.
    std::vector<Simplex> interior_faces;
    bool covers = false;
    /// covers and no interior_faces: the induced complex on boundary points
    /// triangulates the boundary.
    bool triangulates_boundary = false;

    std::vector<Simplex> boundary_simplices() const;
};

BoundaryComplexReport induced_boundary_complex(const Triangulation& t, const AlcovedPolytope& p,
                                               TriangulationOptions opts = {});

/// The facet F of p cut out by constraint c, as an alcoved polytope in
/// dimension d - 1 (the coordinate eliminated by the facet equation is dropped).
struct FacetProjection {
    AlcovedPolytope polytope;
    std::size_t dropped = 0;  // 1-based coordinate removed
    LatticePoint project(const LatticePoint& x) const;
};

FacetProjection facet_polytope(const AlcovedPolytope& p, const Constraint& facet);

/// Whether T restricted to each facet equals the facet's own alcove triangulation.
bool facet_restrictions_are_alcoved(const Triangulation& t, const AlcovedPolytope& p,
                                    TriangulationOptions opts = {});

}  // namespace alcoved
