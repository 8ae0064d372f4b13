#include "doctest.h"
#include "oracles.hpp"

#include "alcoved/errors.hpp"
#include "alcoved/lattice_core.hpp"

using namespace alcoved;

namespace {

HRep sys(std::size_t d, std::vector<Constraint> cs) { return canonicalize(cs, d); }

}  // namespace

TEST_CASE("canonicalize keeps the tightest bound per ordered pair") {
    const HRep h = sys(1, {{1, 0, 1}, {1, 0, 3}});
    REQUIRE(h.constraints().size() == 1);
    CHECK(h.constraints()[0] == Constraint{1, 0, 1});

    const HRep g = sys(2, {{2, 1, -1}, {1, 2, 2}});
    REQUIRE(g.constraints().size() == 2);
    CHECK(g.constraints()[0] == Constraint{1, 2, 2});
    CHECK(g.bound(2, 1) == -1);
    CHECK_FALSE(g.bound(0, 1).has_value());

    CHECK(sys(2, {}).constraints().empty());
    CHECK_THROWS_AS(sys(2, {{3, 0, 1}}), IndexOutOfRange);
    CHECK_THROWS_AS(sys(2, {{1, 1, 1}}), InvalidArgument);
}

TEST_CASE("constraint text") {
    CHECK(Constraint{1, 0, 3}.to_string() == "x_1 <= 3");
    CHECK(Constraint{0, 2, 1}.to_string() == "-x_2 <= 1");
    CHECK(Constraint{1, 2, -1}.to_string() == "x_1 - x_2 <= -1");
}

TEST_CASE("tight bounds") {
    const HRep seg = sys(1, {{1, 0, 2}, {0, 1, -1}});
    CHECK(tight_bounds(seg) == std::vector<Interval>{{1, 2}});

    std::vector<Constraint> q2;
    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j <= 2; ++j)
            if (i != j) q2.push_back({i, j, 1});
    CHECK(tight_bounds(sys(2, q2)) == std::vector<Interval>{{-1, 1}, {-1, 1}});

    // Implied bounds through a chain: x_2 <= x_1 + 1 <= 3.
    const HRep chain = sys(2, {{1, 0, 2}, {2, 1, 1}, {0, 1, 0}, {1, 2, 0}});
    CHECK(tight_bounds(chain) == std::vector<Interval>{{0, 2}, {0, 3}});

    CHECK_THROWS_AS(tight_bounds(sys(2, {{1, 2, -1}, {2, 1, -1}})), Infeasible);
    try {
        (void)tight_bounds(sys(2, {{0, 1, 0}, {2, 0, 1}, {0, 2, 0}}));
        FAIL("expected Unbounded");
    } catch (const Unbounded& e) {
        CHECK(e.coordinate() == 1);
    }
}

TEST_CASE("infeasibility agrees with a brute-force box scan") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + trial % 3;
        std::vector<Constraint> cs;
        for (std::size_t i = 1; i <= d; ++i) {
            cs.push_back({i, 0, rng.uniform(-2, 2)});
            cs.push_back({0, i, rng.uniform(-2, 2)});
        }
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 1; j <= d; ++j)
                if (i != j && rng.uniform(0, 1)) cs.push_back({i, j, rng.uniform(-3, 2)});
        const HRep h = sys(d, cs);
        // Bounded by the box constraints, so integer feasibility is real feasibility.
        const bool empty = oracle::box_count(h, -3, 3) == 0;
        bool threw = false;
        try {
            (void)DifferenceClosure(h);
        } catch (const Infeasible&) {
            threw = true;
        }
        CHECK(threw == empty);
        if (!empty) {
            const auto b = tight_bounds(h);
            const auto pts = oracle::box_points(h, -3, 3);
            for (std::size_t k = 0; k < d; ++k) {
                Coord lo = 99, hi = -99;
                for (const auto& p : pts) lo = std::min(lo, p[k]), hi = std::max(hi, p[k]);
                CHECK(b[k] == Interval{lo, hi});
            }
        }
    }
}

TEST_CASE("full dimensionality") {
    std::vector<Constraint> q3;
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 3; ++j)
            if (i != j) q3.push_back({i, j, 1});
    CHECK(is_full_dimensional(sys(3, q3)));
    CHECK_FALSE(is_full_dimensional(sys(1, {{1, 0, 0}, {0, 1, 0}})));
    // x_1 = x_2 via a zero-weight cycle through two pair constraints.
    CHECK_FALSE(is_full_dimensional(sys(2, {{1, 0, 1}, {0, 1, 0}, {1, 2, 0}, {2, 1, 0}})));
    CHECK(is_full_dimensional(sys(2, {{1, 0, 1}, {0, 1, 0}, {1, 2, 1}, {2, 1, 0}, {0, 2, 0}})));
}

TEST_CASE("containment, strict and not") {
    std::vector<Constraint> q2;
    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j <= 2; ++j)
            if (i != j) q2.push_back({i, j, 1});
    const HRep h = sys(2, q2);
    const LatticePoint origin{0, 0}, corner{1, -1}, vertex{1, 1};
    CHECK(contains(h, origin, true));
    CHECK_FALSE(contains(h, corner));
    CHECK(contains(h, vertex));
    CHECK_FALSE(contains(h, vertex, true));
    const std::vector<Rational> half{Rational(1, 2), Rational(0)};
    CHECK(contains(h, half, true));
    const std::vector<Rational> edge{Rational(1), Rational(1, 2)};
    CHECK(contains(h, edge));
    CHECK_FALSE(contains(h, edge, true));
}

TEST_CASE("dilation and the interior system") {
    const HRep h = sys(2, {{1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {0, 2, 1}, {1, 2, 1}, {2, 1, 1}});
    const HRep h2 = dilate(h, 2);
    for (const auto& c : h2.constraints()) CHECK(c.bound == 2);
    CHECK(dilate(h, 1) == h);
    const HRep h0 = dilate(h, 0);
    CHECK(oracle::box_points(h0, -2, 2) == std::vector<LatticePoint>{{0, 0}});
    CHECK(oracle::box_points(interior_system(h2), -3, 3) == oracle::box_points(h2, -3, 3, 1));
    CHECK_THROWS_AS(dilate(sys(1, {{1, 0, std::int64_t{1} << 62}}), 4), Overflow);
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Overflow);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), Overflow);
    CHECK(checked_mul(-4, 5) == -20);
}
