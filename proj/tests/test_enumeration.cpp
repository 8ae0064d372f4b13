#include "doctest.h"
#include "oracles.hpp"

#include "alcoved/errors.hpp"
#include "alcoved/enumeration.hpp"

using namespace alcoved;

TEST_CASE("named polytopes") {
    const auto q2 = lattice_points(make_qd(2));
    CHECK(q2.size() == 7);
    CHECK(q2.interior_count() == 1);
    const auto q3 = lattice_points(make_qd(3));
    CHECK(q3.size() == 15);
    CHECK(q3.interior_count() == 1);
    const auto cube = lattice_points(make_order_polytope(3, {}));
    CHECK(cube.size() == 8);
    CHECK(cube.interior_count() == 0);

    CHECK(interior_lattice_points(make_qd(4)) == std::vector<LatticePoint>{LatticePoint(4, 0)});
    CHECK(interior_lattice_points(make_sharp_distance_example(3)) == std::vector<LatticePoint>{{1, 2, 3}});
    CHECK(interior_lattice_points(make_order_polytope(3, {})).empty());
}

TEST_CASE("dilates") {
    const auto square = make_order_polytope(2, {});
    for (std::uint64_t t = 0; t <= 6; ++t) CHECK(count_dilate(square, t) == (t + 1) * (t + 1));
    CHECK(count_dilate(make_qd(2), 1) == 7);
    const auto simplex = make_scaled_chain_simplex(3, 1);
    CHECK(count_dilate(simplex, 2) == 10);
    CHECK(count_interior_dilate(simplex, 1) == 0);
    CHECK(count_interior_dilate(simplex, 4) == 1);
    CHECK(count_dilate(make_qd(3), 0) == 1);
}

TEST_CASE("enumeration agrees with a box scan on random polytopes") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        const std::size_t d = 1 + s % 4;
        const bool small = s % 3 == 0;
        const std::uint64_t t = 1 + s % 3;
        const auto p = random_alcoved(std::max<std::size_t>(d, 2), derive_seed(Seed{23}, s), small);
        const HRep h = dilate(p.hrep(), t);
        const Coord lo = -2 * static_cast<Coord>(t), hi = 3 * static_cast<Coord>(t);
        const auto expected = oracle::box_points(h, lo, hi);
        const auto got = lattice_points(h);
        CHECK(got.points == expected);
        CHECK(count_dilate(p, t) == expected.size());
        const auto interior = oracle::box_points(h, lo, hi, 1);
        CHECK(count_interior_dilate(p, t) == interior.size());
        std::vector<LatticePoint> flagged;
        for (std::size_t k = 0; k < got.size(); ++k)
            if (got.interior_mask[k]) flagged.push_back(got.points[k]);
        CHECK(flagged == interior);
    }
}

TEST_CASE("budgets") {
    EnumerationOptions tight{10};
    CHECK_THROWS_AS(lattice_points(make_qd(3), tight), EnumerationBudgetExceeded);
    CHECK_THROWS_AS(count_dilate(make_qd(3), 50, tight), EnumerationBudgetExceeded);
    CHECK_NOTHROW(lattice_points(make_qd(2), EnumerationOptions{100}));
}

TEST_CASE("large counts stay exact") {
    // (t+1)^{d+1} - t^{d+1} for Q_d.
    const std::uint64_t t = 40;
    Integer expected = Integer(41) * 41 * 41 * 41 - Integer(40) * 40 * 40 * 40;
    CHECK(count_dilate(make_qd(3), t) == expected);
}
