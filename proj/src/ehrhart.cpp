#include "alcoved/ehrhart.hpp"

#include "alcoved/errors.hpp"

#include <sstream>
#include <utility>

namespace alcoved {

namespace {

using Poly = std::vector<Rational>;

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim(coeffs_);
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0 || !unit) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Integer HStarVector::sum() const {
    Integer s = 0;
    for (const auto& e : entries) s += e;
    return s;
}

std::string HStarVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += entries[i].get_str();
    }
    return out + ")";
}

HStarVector make_hstar(std::initializer_list<long> values) {
    HStarVector h;
    for (long v : values) h.entries.emplace_back(v);
    return h;
}

EulerianTable::EulerianTable(std::size_t n) : n_(n), values_((n + 1) * (n + 1), Integer(0)) {
    auto cell = [&](std::size_t j, std::size_t k) -> Integer& { return values_[j * (n_ + 1) + k]; };
    cell(0, 0) = 1;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= j; ++k)
            cell(j, k) = Integer(static_cast<unsigned long>(j - k + 1)) * cell(j - 1, k - 1) +
                         Integer(static_cast<unsigned long>(k)) * cell(j - 1, k);
}

EulerianTable eulerian_numbers(std::size_t n) { return EulerianTable(n); }

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw InvalidArgument("interpolation needs matching nonempty node lists");
    Poly result(xs.size(), Rational(0));
    for (std::size_t k = 0; k < xs.size(); ++k) {
        Poly basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t m = 0; m < xs.size(); ++m) {
            if (m == k) continue;
            basis = multiply(basis, Poly{-xs[m], Rational(1)});
            denom *= xs[k] - xs[m];
        }
        if (denom == 0) throw InvalidArgument("repeated interpolation node");
        const Rational scale = ys[k] / denom;
        for (std::size_t i = 0; i < basis.size(); ++i) result[i] += scale * basis[i];
    }
    return Polynomial(std::move(result));
}

Polynomial ehrhart_polynomial(const AlcovedPolytope& p, EnumerationOptions opts) {
    const std::size_t d = p.dim();
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= d; ++t) {
        xs.emplace_back(static_cast<unsigned long>(t));
        ys.emplace_back(count_dilate(p, t, opts));
    }
    return interpolate(xs, ys);
}

HStarVector ehr_to_hstar(const Polynomial& ehr, std::size_t d) {
    if (ehr.degree() > static_cast<int>(d))
        throw NotLatticeEhrhart("Ehrhart polynomial of degree " + std::to_string(ehr.degree()) +
                                " exceeds dimension " + std::to_string(d));
    const EulerianTable A(d);
    Poly total(d + 1, Rational(0));
    for (std::size_t i = 0; i <= d; ++i) {
        const Rational& c = ehr.coeff(i);
        if (c == 0) continue;
        Poly eulerian(i + 1);
        for (std::size_t k = 0; k <= i; ++k) eulerian[k] = Rational(A.at(i, k));
        Poly term = multiply(Poly{c}, eulerian);
        for (std::size_t e = 0; e < d - i; ++e) term = multiply(term, Poly{Rational(1), Rational(-1)});
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    }
    HStarVector h;
    h.entries.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        Rational c = total[k];
        c.canonicalize();
        if (c.get_den() != 1 || c < 0)
            throw NotLatticeEhrhart("h*_" + std::to_string(k) + " = " + c.get_str() +
                                    " is not a nonnegative integer");
        h.entries.push_back(c.get_num());
    }
    if (h.entries[0] != 1) throw NotLatticeEhrhart("h*_0 = " + h.entries[0].get_str() + ", expected 1");
    return h;
}

Polynomial hstar_to_ehrhart(const HStarVector& h) {
    if (h.entries.empty()) return Polynomial();
    const std::size_t d = h.size() - 1;
    // C(t - i + d, d) = prod_{m=1..d} (t - i + m) / d!
    Rational dfact = 1;
    for (std::size_t m = 1; m <= d; ++m) dfact *= Rational(static_cast<unsigned long>(m));
    Poly total(d + 1, Rational(0));
    for (std::size_t i = 0; i <= d; ++i) {
        if (h.entries[i] == 0) continue;
        Poly b{Rational(1)};
        for (std::size_t m = 1; m <= d; ++m)
            b = multiply(b, Poly{Rational(static_cast<long>(m) - static_cast<long>(i)), Rational(1)});
        const Rational scale = Rational(h.entries[i]) / dfact;
        for (std::size_t k = 0; k < b.size(); ++k) total[k] += scale * b[k];
    }
    return Polynomial(std::move(total));
}

HStarVector hstar(const AlcovedPolytope& p, EnumerationOptions opts) {
    const std::size_t d = p.dim();
    HStarVector h = ehr_to_hstar(ehrhart_polynomial(p, opts), d);
    const Integer points = count_dilate(p, 1, opts);
    const Integer interior = count_interior_dilate(p, 1, opts);
    const Integer expected_h1 = points - Integer(static_cast<unsigned long>(d + 1));
    if (h.entries[1] != expected_h1)
        throw NotLatticeEhrhart("h*_1 = " + h.entries[1].get_str() + " but |P cap Z^d| - (d+1) = " +
                                expected_h1.get_str());
    if (h.entries[d] != interior)
        throw NotLatticeEhrhart("h*_d = " + h.entries[d].get_str() + " but interior count is " +
                                interior.get_str());
    return h;
}

}  // namespace alcoved
