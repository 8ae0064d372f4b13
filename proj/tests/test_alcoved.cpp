#include "doctest.h"
#include "oracles.hpp"

#include "alcoved/errors.hpp"
#include "alcoved/alcoved.hpp"
#include "alcoved/enumeration.hpp"

#include <set>

using namespace alcoved;

TEST_CASE("validate") {
    std::vector<Constraint> q3;
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 3; ++j)
            if (i != j) q3.push_back({i, j, 1});
    const auto p = validate(q3, 3);
    CHECK(p.hrep().constraints().size() == 12);
    CHECK(p == make_qd(3));

    std::vector<Constraint> no_upper{{0, 1, 0}, {2, 0, 1}, {0, 2, 0}};
    CHECK_THROWS_AS(validate(no_upper, 2), Unbounded);
    std::vector<Constraint> cycle{{1, 2, -1}, {2, 1, -1}, {1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {0, 2, 1}};
    CHECK_THROWS_AS(validate(cycle, 2), Infeasible);
    std::vector<Constraint> flat{{1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(validate(flat, 1), NotFullDimensional);
}

TEST_CASE("facets match the relax-by-one lattice oracle") {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto q = make_qd(d);
        CHECK(facets(q).size() == 2 * oracle::binom(d + 1, 2));
        for (const auto& c : q.hrep().constraints()) CHECK(oracle::relax_adds_points(q.hrep(), c, -1, 1));
    }
    for (std::uint64_t s = 0; s < 60; ++s) {
        const std::size_t d = 2 + s % 3;
        const auto p = random_alcoved(d, derive_seed(Seed{5}, s), s % 2 == 0);
        for (const auto& c : p.hrep().constraints())
            CHECK_MESSAGE(is_facet(p, c) == oracle::relax_adds_points(p.hrep(), c, -2, 3), c.to_string());
    }
}

TEST_CASE("Q_d") {
    const auto q1 = make_qd(1);
    CHECK(q1.bounds() == std::vector<Interval>{{-1, 1}});
    const auto q2 = make_qd(2);
    CHECK(q2.bounds() == std::vector<Interval>{{-1, 1}, {-1, 1}});
    CHECK(facets(q2).size() == 6);
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto q = make_qd(d);
        CHECK(oracle::box_count(q.hrep(), -1, 1) == (std::uint64_t{1} << (d + 1)) - 1);
        CHECK(oracle::box_points(q.hrep(), -1, 1, 1) == std::vector<LatticePoint>{LatticePoint(d, 0)});
    }
}

TEST_CASE("hypersimplex lattice points are the 0/1 vectors with k ones") {
    for (auto [d, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {4, 2}, {5, 2}, {5, 3}}) {
        const auto p = make_hypersimplex(d, k);
        CHECK(p.dim() == d - 1);
        // x in {0,1}^d with sum k, mapped to partial sums z_j = x_1 + ... + x_j, j < d.
        std::set<LatticePoint> expected;
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            LatticePoint z;
            Coord acc = 0;
            for (std::size_t j = 0; j + 1 < d; ++j) z.push_back(acc += (mask >> j) & 1);
            expected.insert(z);
        }
        const auto pts = lattice_points(p).points;
        CHECK(std::set<LatticePoint>(pts.begin(), pts.end()) == expected);
        CHECK(pts.size() == oracle::binom(d, k));
    }
    const auto seg = make_hypersimplex(2, 1);
    CHECK(seg.bounds() == std::vector<Interval>{{0, 1}});
    CHECK_THROWS_AS(make_hypersimplex(3, 0), InvalidArgument);
    CHECK_THROWS_AS(make_hypersimplex(3, 3), InvalidArgument);
}

TEST_CASE("order polytopes") {
    const auto square = make_order_polytope(2, {});
    CHECK(square.bounds() == std::vector<Interval>{{0, 1}, {0, 1}});
    CHECK(oracle::box_count(square.hrep(), -1, 2) == 4);

    const std::vector<std::pair<std::size_t, std::size_t>> chain{{1, 2}, {2, 3}};
    const auto simplex = make_order_polytope(3, chain);
    CHECK(oracle::box_points(simplex.hrep(), -1, 2) ==
          std::vector<LatticePoint>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}});

    CHECK(make_order_polytope(1, {}).bounds() == std::vector<Interval>{{0, 1}});
    const std::vector<std::pair<std::size_t, std::size_t>> cyclic{{1, 2}, {2, 3}, {3, 1}};
    CHECK_THROWS_AS(make_order_polytope(3, cyclic), CyclicRelations);
}

TEST_CASE("sharp distance example") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const auto p = make_sharp_distance_example(d);
        LatticePoint center;
        for (std::size_t k = 1; k <= d; ++k) center.push_back(static_cast<Coord>(k));
        CHECK(oracle::box_points(p.hrep(), 0, static_cast<Coord>(d + 1), 1) == std::vector<LatticePoint>{center});
        CHECK(is_facet(p, Constraint{1, 0, static_cast<Coord>(d)}));
    }
}

TEST_CASE("random generator") {
    SUBCASE("contains the unit cube and stays in its box") {
        for (std::uint64_t s = 0; s < 200; ++s) {
            const bool small = s % 2;
            const std::size_t d = 2 + s % 3;
            const auto p = random_alcoved(d, derive_seed(Seed{17}, s), small);
            oracle::for_each_in_box(d, 0, 1, [&](const LatticePoint& v) { CHECK(contains(p.hrep(), v)); });
            for (const auto& b : p.bounds()) {
                CHECK(b.lo >= (small ? -1 : -2));
                CHECK(b.hi <= (small ? 2 : 3));
            }
        }
    }
    SUBCASE("deterministic and independent of call order") {
        const auto a = random_alcoved(2, Seed{42}, false);
        (void)random_alcoved(3, Seed{7}, true);
        CHECK(random_alcoved(2, Seed{42}, false) == a);
    }
    SUBCASE("draw order: pairs, then upper, then lower bounds") {
        SplitMix64 rng(99);
        std::vector<Constraint> cs;
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t j = 1; j <= 3; ++j)
                if (i != j) cs.push_back({i, j, rng.uniform(1, 5)});
        for (std::size_t i = 1; i <= 3; ++i) cs.push_back({i, 0, rng.uniform(1, 3)});
        for (std::size_t i = 1; i <= 3; ++i) cs.push_back({0, i, rng.uniform(0, 2)});
        CHECK(random_alcoved(3, Seed{99}, false).hrep() == canonicalize(cs, 3));
    }
}

TEST_CASE("SplitMix64 reference values") {
    // First outputs for seed 0 of the published reference implementation.
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFull);
    CHECK(g.next() == 0x6E789E6AA1B965F4ull);
    CHECK(derive_seed(Seed{0}, 0).value == 0xE220A8397B1DCDAFull);
    SplitMix64 u(3);
    for (int k = 0; k < 1000; ++k) {
        const auto x = u.uniform(-2, 3);
        CHECK((x >= -2 && x <= 3));
    }
}
