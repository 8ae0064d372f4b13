#pragma once

#include "alcoved/alcoved.hpp"
#include "alcoved/enumeration.hpp"

#include <string>
#include <vector>

namespace alcoved {

/// Polynomial with rational coefficients, index = degree, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational operator()(const Rational& t) const;
    std::string to_string(const std::string& var = "t") const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// h*_0 .. h*_d, length d + 1 with trailing zeros kept.
struct HStarVector {
    std::vector<Integer> entries;

    std::size_t size() const noexcept { return entries.size(); }
    const Integer& operator[](std::size_t i) const { return entries[i]; }
    Integer sum() const;
    std::string to_string() const;
    friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

HStarVector make_hstar(std::initializer_list<long> values);

/// A(j, k) for 0 <= k <= j <= n via A(j,k) = (j-k+1) A(j-1,k-1) + k A(j-1,k).
class EulerianTable {
public:
    explicit EulerianTable(std::size_t n);
    std::size_t n() const noexcept { return n_; }
    const Integer& at(std::size_t j, std::size_t k) const { return values_[j * (n_ + 1) + k]; }

private:
    std::size_t n_;
    std::vector<Integer> values_;
};

EulerianTable eulerian_numbers(std::size_t n);

/// Unique polynomial of degree <= nodes.size() - 1 through (x_k, y_k).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Interpolates L_P(t) at t = 0..d.
Polynomial ehrhart_polynomial(const AlcovedPolytope& p, EnumerationOptions opts = {});

/// Expands sum_i c_i (sum_k A(i,k) z^k) (1 - z)^(d - i). Throws
/// NotLatticeEhrhart unless the result is a nonnegative integer vector with
/// h*_0 = 1.
HStarVector ehr_to_hstar(const Polynomial& ehr, std::size_t d);

/// L(t) = sum_i h*_i C(t - i + d, d): the Ehrhart polynomial of an h*-vector.
Polynomial hstar_to_ehrhart(const HStarVector& h);

/// h*-vector of p, cross-checked against direct counts of boundary and
/// interior points.
HStarVector hstar(const AlcovedPolytope& p, EnumerationOptions opts = {});

}  // namespace alcoved
