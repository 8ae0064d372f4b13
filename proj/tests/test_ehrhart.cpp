#include "doctest.h"
#include "oracles.hpp"

#include "alcoved/errors.hpp"
#include "alcoved/ehrhart.hpp"

using namespace alcoved;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

// (t+1)^n by repeated multiplication, independent of binomial helpers.
Polynomial shifted_power(std::size_t n) {
    std::vector<Rational> c{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) next[i] += c[i], next[i + 1] += c[i];
        c = next;
    }
    return Polynomial(c);
}

}  // namespace

TEST_CASE("Lagrange interpolation through brute-force counts") {
    // Q_2 at t = 0, 1, 2 counted by box scan.
    const HRep q2 = make_qd(2).hrep();
    std::vector<Rational> xs, ys;
    for (std::uint64_t t = 0; t <= 2; ++t) {
        xs.emplace_back(static_cast<long>(t));
        ys.emplace_back(static_cast<unsigned long>(oracle::box_count(dilate(q2, t), -2, 2)));
    }
    CHECK(ys == std::vector<Rational>{1, 7, 19});
    CHECK(interpolate(xs, ys) == poly({1, 3, 3}));
    CHECK(ehrhart_polynomial(make_qd(2)) == poly({1, 3, 3}));
    CHECK(ehrhart_polynomial(make_order_polytope(2, {})) == poly({1, 2, 1}));
    CHECK_THROWS_AS(interpolate({Rational(1), Rational(1)}, {Rational(0), Rational(1)}), InvalidArgument);
}

TEST_CASE("unimodular simplex counts are binomials") {
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto s = make_scaled_chain_simplex(d, 1);
        const Polynomial ehr = ehrhart_polynomial(s);
        for (std::uint64_t t = 0; t <= 6; ++t)
            CHECK(ehr(Rational(static_cast<long>(t))) == Rational(static_cast<unsigned long>(oracle::binom(t + d, d))));
        std::vector<Integer> one(d + 1, 0);
        one[0] = 1;
        CHECK(hstar(s).entries == one);
    }
}

TEST_CASE("Eulerian numbers") {
    const auto a = eulerian_numbers(4);
    CHECK(a.at(0, 0) == 1);
    CHECK((std::vector<Integer>{a.at(3, 0), a.at(3, 1), a.at(3, 2), a.at(3, 3)}) ==
          std::vector<Integer>{0, 1, 4, 1});
    CHECK((std::vector<Integer>{a.at(4, 0), a.at(4, 1), a.at(4, 2), a.at(4, 3), a.at(4, 4)}) ==
          std::vector<Integer>{0, 1, 11, 11, 1});
}

TEST_CASE("Ehrhart to h*") {
    CHECK(ehr_to_hstar(shifted_power(3), 3) == make_hstar({1, 4, 1, 0}));
    std::vector<Rational> simplex4{24, 50, 35, 10, 1};
    for (auto& c : simplex4) c /= 24;
    CHECK(ehr_to_hstar(Polynomial(simplex4), 4) == make_hstar({1, 0, 0, 0, 0}));
    CHECK(ehr_to_hstar(poly({1, 3, 3}), 2) == make_hstar({1, 4, 1}));
    CHECK_THROWS_AS(ehr_to_hstar(poly({1, 3, 3}), 1), NotLatticeEhrhart);
    CHECK_THROWS_AS(ehr_to_hstar(poly({2, 3, 3}), 2), NotLatticeEhrhart);
    std::vector<Rational> half{Rational(1), Rational(1, 2)};
    CHECK_THROWS_AS(ehr_to_hstar(Polynomial(half), 1), NotLatticeEhrhart);
}

TEST_CASE("h* of named polytopes") {
    CHECK(hstar(make_qd(2)) == make_hstar({1, 4, 1}));
    CHECK(hstar(make_qd(3)) == make_hstar({1, 11, 11, 1}));
    CHECK(hstar(make_order_polytope(2, {})) == make_hstar({1, 1, 0}));
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto h = hstar(make_scaled_chain_simplex(d, static_cast<Coord>(d + 1)));
        for (std::size_t i = 0; i <= d; ++i) CHECK(h[i] == h[d - i]);
    }
    CHECK(hstar(make_qd(3)).to_string() == "(1,11,11,1)");
    CHECK(hstar(make_qd(3)).sum() == 24);
}

TEST_CASE("h* round trip on random vectors") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t d = 1 + trial % 6;
        HStarVector h;
        h.entries.push_back(1);
        for (std::size_t i = 1; i <= d; ++i) h.entries.push_back(rng.uniform(0, 50));
        const Polynomial ehr = hstar_to_ehrhart(h);
        CHECK(ehr.degree() <= static_cast<int>(d));
        // Series check: L(t) = sum_i h_i C(t - i + d, d) at t = 0..d+2.
        for (long t = 0; t <= static_cast<long>(d) + 2; ++t) {
            Integer direct = 0;
            for (std::size_t i = 0; i <= d; ++i)
                if (t >= static_cast<long>(i))
                    direct += h[i] * Integer(static_cast<unsigned long>(oracle::binom(t - i + d, d)));
            CHECK(ehr(Rational(t)) == Rational(direct));
        }
        CHECK(ehr_to_hstar(ehr, d) == h);
    }
}

TEST_CASE("polynomial text") {
    CHECK(poly({1, 3, 3}).to_string() == "3*t^2 + 3*t + 1");
    CHECK(Polynomial().degree() == -1);
    CHECK(poly({0, 0}).degree() == -1);
}
