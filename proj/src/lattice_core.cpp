#include "alcoved/lattice_core.hpp"

#include "alcoved/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace alcoved {

Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("64-bit overflow in coordinate arithmetic");
    return r;
}

Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("64-bit overflow in coordinate arithmetic");
    return r;
}

namespace {

template <typename T>
T coordinate(std::span<const T> p, std::size_t idx) {
    return idx == 0 ? T(0) : p[idx - 1];
}

}  // namespace

Coord Constraint::lhs(std::span<const Coord> p) const {
    return checked_add(coordinate(p, i), -coordinate(p, j));
}

Rational Constraint::lhs(std::span<const Rational> p) const {
    return coordinate(p, i) - coordinate(p, j);
}

std::string Constraint::to_string() const {
    auto var = [](std::size_t idx) { return "x_" + std::to_string(idx); };
    const std::string k = std::to_string(bound);
    if (j == 0) return var(i) + " <= " + k;
    if (i == 0) return "-" + var(j) + " <= " + k;
    return var(i) + " - " + var(j) + " <= " + k;
}

std::optional<Coord> HRep::bound(std::size_t i, std::size_t j) const {
    auto it = std::lower_bound(constraints_.begin(), constraints_.end(), Constraint{i, j, 0},
                               [](const Constraint& a, const Constraint& b) {
                                   return std::pair(a.i, a.j) < std::pair(b.i, b.j);
                               });
    if (it != constraints_.end() && it->i == i && it->j == j) return it->bound;
    return std::nullopt;
}

HRep canonicalize(std::span<const Constraint> constraints, std::size_t dim) {
    std::map<std::pair<std::size_t, std::size_t>, Coord> tightest;
    for (const auto& c : constraints) {
        if (c.i > dim || c.j > dim)
            throw IndexOutOfRange("constraint index exceeds dimension " + std::to_string(dim) +
                                  ": " + c.to_string());
        if (c.i == c.j) throw InvalidArgument("constraint with i == j: " + c.to_string());
        auto [it, inserted] = tightest.try_emplace({c.i, c.j}, c.bound);
        if (!inserted) it->second = std::min(it->second, c.bound);
    }
    HRep h;
    h.dim_ = dim;
    h.constraints_.reserve(tightest.size());
    for (const auto& [key, bound] : tightest) h.constraints_.push_back({key.first, key.second, bound});
    return h;
}

DifferenceClosure::DifferenceClosure(const HRep& h)
    : n_(h.dim() + 1), dist_(n_ * n_, 0), reach_(n_ * n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) reach_[v * n_ + v] = 1;
    for (const auto& c : h.constraints()) {
        const std::size_t e = c.j * n_ + c.i;
        if (!reach_[e] || c.bound < dist_[e]) {
            dist_[e] = c.bound;
            reach_[e] = 1;
        }
    }
    for (std::size_t m = 0; m < n_; ++m)
        for (std::size_t u = 0; u < n_; ++u) {
            if (!reach_[u * n_ + m]) continue;
            const Coord um = dist_[u * n_ + m];
            for (std::size_t v = 0; v < n_; ++v) {
                if (!reach_[m * n_ + v]) continue;
                const Coord cand = checked_add(um, dist_[m * n_ + v]);
                const std::size_t e = u * n_ + v;
                if (!reach_[e] || cand < dist_[e]) {
                    dist_[e] = cand;
                    reach_[e] = 1;
                }
            }
        }
    for (std::size_t v = 0; v < n_; ++v)
        if (dist_[v * n_ + v] < 0) throw Infeasible();
}

std::vector<Interval> tight_bounds(const HRep& h) {
    const DifferenceClosure closure(h);
    std::vector<Interval> out(h.dim());
    for (std::size_t i = 1; i <= h.dim(); ++i) {
        if (!closure.reachable(0, i) || !closure.reachable(i, 0)) throw Unbounded(i);
        out[i - 1] = {-closure.raw(i, 0), closure.raw(0, i)};
    }
    return out;
}

bool is_full_dimensional(const HRep& h) {
    (void)tight_bounds(h);
    // Edge weights (k, -1) compared lexicographically; a cycle of weight
    // <= (0, 0) forces equality somewhere.
    using Weight = std::pair<Coord, Coord>;
    const std::size_t n = h.dim() + 1;
    std::vector<std::optional<Weight>> dist(n * n);
    for (const auto& c : h.constraints()) dist[c.j * n + c.i] = Weight{c.bound, -1};
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t u = 0; u < n; ++u) {
            if (!dist[u * n + m]) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (!dist[m * n + v]) continue;
                const Weight cand{checked_add(dist[u * n + m]->first, dist[m * n + v]->first),
                                  dist[u * n + m]->second + dist[m * n + v]->second};
                auto& cur = dist[u * n + v];
                if (!cur || cand < *cur) cur = cand;
            }
        }
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v * n + v] && *dist[v * n + v] <= Weight{0, 0}) return false;
    return true;
}

namespace {

template <typename T>
bool contains_impl(const HRep& h, std::span<const T> p, bool strict) {
    if (p.size() != h.dim())
        throw DimensionMismatch("point of length " + std::to_string(p.size()) +
                                " queried against dimension " + std::to_string(h.dim()));
    for (const auto& c : h.constraints()) {
        const auto v = c.lhs(p);
        if (strict ? !(v < c.bound) : !(v <= c.bound)) return false;
    }
    return true;
}

}  // namespace

bool contains(const HRep& h, std::span<const Coord> p, bool strict) {
    return contains_impl(h, p, strict);
}

bool contains(const HRep& h, std::span<const Rational> p, bool strict) {
    return contains_impl(h, p, strict);
}

HRep dilate(const HRep& h, std::uint64_t t) {
    if (t > static_cast<std::uint64_t>(INT64_MAX)) throw Overflow("dilation factor too large");
    std::vector<Constraint> cs = h.constraints();
    for (auto& c : cs) c.bound = checked_mul(c.bound, static_cast<Coord>(t));
    return canonicalize(cs, h.dim());
}

HRep interior_system(const HRep& h) {
    std::vector<Constraint> cs = h.constraints();
    for (auto& c : cs) c.bound = checked_add(c.bound, -1);
    return canonicalize(cs, h.dim());
}

std::optional<Coord> max_difference_without(const HRep& h, const Constraint& skip) {
    std::vector<Constraint> rest;
    rest.reserve(h.constraints().size());
    for (const auto& c : h.constraints())
        if (!(c.i == skip.i && c.j == skip.j)) rest.push_back(c);
    const DifferenceClosure closure(canonicalize(rest, h.dim()));
    return closure.at(skip.j, skip.i);
}

}  // namespace alcoved
