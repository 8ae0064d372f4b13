#include "alcoved/triangulation.hpp"

#include "alcoved/analysis.hpp"
#include "alcoved/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace alcoved {

Simplex make_simplex(std::vector<LatticePoint> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex{std::move(vertices)};
}

Integer determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer edge_determinant(const Simplex& s) {
    const std::size_t k = s.dim();
    std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
    for (std::size_t r = 0; r < k; ++r) {
        if (s.vertices[r + 1].size() != k)
            throw DimensionMismatch("simplex with " + std::to_string(k + 1) +
                                    " vertices must live in dimension " + std::to_string(k));
        for (std::size_t c = 0; c < k; ++c)
            m[r][c] = Integer(static_cast<long>(s.vertices[r + 1][c] - s.vertices[0][c]));
    }
    return determinant(std::move(m));
}

bool is_unimodular(const Simplex& s) {
    const Integer det = edge_determinant(s);
    if (det == 0) throw DegenerateSimplex();
    return abs(det) == 1;
}

namespace {

std::vector<Simplex> sorted_unique(std::vector<Simplex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Triangulation assemble(std::size_t dim, std::vector<Simplex> cells) {
    Triangulation t;
    t.dim = dim;
    t.maximal_simplices = sorted_unique(std::move(cells));
    for (const auto& s : t.maximal_simplices)
        t.vertex_set.insert(t.vertex_set.end(), s.vertices.begin(), s.vertices.end());
    std::sort(t.vertex_set.begin(), t.vertex_set.end());
    t.vertex_set.erase(std::unique(t.vertex_set.begin(), t.vertex_set.end()), t.vertex_set.end());
    return t;
}

struct IndexKeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : key) h = (h ^ v) * 0x100000001b3ULL;
        return h;
    }
};

using FaceSet = std::unordered_set<std::vector<std::uint32_t>, IndexKeyHash>;

// Every nonempty face of every maximal simplex, as sorted vertex-index keys.
FaceSet all_faces(const Triangulation& t) {
    FaceSet faces;
    for (const auto& s : t.maximal_simplices) {
        std::vector<std::uint32_t> idx;
        for (const auto& v : s.vertices)
            idx.push_back(static_cast<std::uint32_t>(
                std::lower_bound(t.vertex_set.begin(), t.vertex_set.end(), v) - t.vertex_set.begin()));
        const std::size_t k = idx.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<std::uint32_t> key;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) key.push_back(idx[b]);
            std::sort(key.begin(), key.end());
            faces.insert(std::move(key));
        }
    }
    return faces;
}

}  // namespace

Triangulation alcove_triangulation(const AlcovedPolytope& p, TriangulationOptions opts) {
    const std::size_t d = p.dim();
    const auto& box = p.bounds();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Simplex> cells;
    LatticePoint base(d);
    for (std::size_t i = 0; i < d; ++i) base[i] = box[i].lo;
    std::vector<char> inside(std::size_t{1} << d);
    LatticePoint corner(d);
    while (true) {
        bool cube_ok = true;
        for (std::size_t i = 0; i < d; ++i) cube_ok = cube_ok && base[i] < box[i].hi;
        if (cube_ok) {
            for (std::size_t mask = 0; mask < inside.size(); ++mask) {
                for (std::size_t i = 0; i < d; ++i) corner[i] = base[i] + ((mask >> i) & 1);
                inside[mask] = contains(p.hrep(), corner);
            }
            if (inside.front() && inside.back()) {
                for (const auto& s : perms) {
                    std::size_t mask = 0;
                    bool ok = true;
                    for (std::size_t k = 0; k < d && ok; ++k) {
                        mask |= std::size_t{1} << s[k];
                        ok = inside[mask];
                    }
                    if (!ok) continue;
                    if (cells.size() >= opts.cell_budget)
                        throw EnumerationBudgetExceeded("alcove triangulation exceeds " +
                                                        std::to_string(opts.cell_budget) + " cells");
                    Simplex cell;
                    cell.vertices.push_back(base);
                    LatticePoint v = base;
                    for (std::size_t k = 0; k < d; ++k) {
                        ++v[s[k]];
                        cell.vertices.push_back(v);
                    }
                    cells.push_back(std::move(cell));
                }
            }
        }
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (base[i] < box[i].hi) {
                ++base[i];
                break;
            }
            base[i] = box[i].lo;
            if (i == 0) return assemble(d, std::move(cells));
        }
    }
}

FVector f_vector(const Triangulation& t) {
    FVector out;
    out.f.assign(t.dim + 2, 0);
    out.f[0] = 1;
    for (const auto& face : all_faces(t)) ++out.f[face.size()];
    return out;
}

HVector h_vector(const FVector& f, std::size_t d) {
    if (f.f.size() != d + 2) throw DimensionMismatch("f-vector length must be d + 2");
    HVector out;
    for (std::size_t k = 0; k <= d + 1; ++k) {
        Integer h = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            Integer term = binomial(static_cast<long>(d + 1 - i), k - i) * Integer(static_cast<long>(f.f[i]));
            if ((k - i) % 2) h -= term;
            else h += term;
        }
        out.h.push_back(h.get_si());
    }
    return out;
}

HypothesisViolated::HypothesisViolated(Constraint facet, std::int64_t distance)
    : Error("facet " + facet.to_string() + " has lattice distance " + std::to_string(distance) +
            " from the interior lattice points; no unimodular triangulation restricts to a "
            "triangulation of the boundary"),
      facet_(facet),
      distance_(distance) {}

namespace {

using i128 = __int128;

// Affine interpolation of two height columns through d+1 points, kept
// fraction-free: after solve(), det * value(x) is exact for both columns.
class LiftedHyperplane {
public:
    explicit LiftedHyperplane(std::size_t d) : n_(d + 1), m_(n_ * (n_ + 2)), scaled_(2 * n_) {}

    // rows: [1, x_1..x_d | b | a]
    bool solve(const std::vector<const LatticePoint*>& pts, const std::vector<std::int64_t>& b,
               const std::vector<std::int64_t>& a) {
        const std::size_t w = n_ + 2;
        for (std::size_t r = 0; r < n_; ++r) {
            m_[r * w] = 1;
            for (std::size_t c = 1; c < n_; ++c) m_[r * w + c] = (*pts[r])[c - 1];
            m_[r * w + n_] = b[r];
            m_[r * w + n_ + 1] = a[r];
        }
        i128 prev = 1;
        for (std::size_t k = 0; k < n_; ++k) {
            if (m_[k * w + k] == 0) {
                std::size_t r = k + 1;
                while (r < n_ && m_[r * w + k] == 0) ++r;
                if (r == n_) return false;
                for (std::size_t c = 0; c < w; ++c) std::swap(m_[k * w + c], m_[r * w + c]);
            }
            for (std::size_t i = k + 1; i < n_; ++i) {
                for (std::size_t j = k + 1; j < w; ++j)
                    m_[i * w + j] = (m_[i * w + j] * m_[k * w + k] - m_[i * w + k] * m_[k * w + j]) / prev;
                m_[i * w + k] = 0;
            }
            prev = m_[k * w + k];
        }
        det_ = m_[(n_ - 1) * w + n_ - 1];
        for (std::size_t col = 0; col < 2; ++col) {
            i128* x = &scaled_[col * n_];
            for (std::size_t i = n_; i-- > 0;) {
                i128 acc = det_ * m_[i * w + n_ + col];
                for (std::size_t j = i + 1; j < n_; ++j) acc -= m_[i * w + j] * x[j];
                x[i] = acc / m_[i * w + i];
            }
        }
        return true;
    }

    i128 det() const { return det_; }

    // sign(det) * det * (height - affine interpolation) at q, for column col.
    i128 excess(std::size_t col, const LatticePoint& q, std::int64_t height) const {
        const i128* x = &scaled_[col * n_];
        i128 v = x[0];
        for (std::size_t c = 1; c < n_; ++c) v += x[c] * q[c - 1];
        const i128 diff = det_ * height - v;
        return det_ < 0 ? -diff : diff;
    }

private:
    std::size_t n_;
    std::vector<i128> m_;
    std::vector<i128> scaled_;
    i128 det_ = 0;
};

std::int64_t alcove_lift(const LatticePoint& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j) s += (x[i] - x[j]) * (x[i] - x[j]);
    }
    return s;
}

}  // namespace

Triangulation boundary_compatible_triangulation(const AlcovedPolytope& p, TriangulationOptions opts) {
    const std::size_t d = p.dim();
    const PointSet A = lattice_points(p, opts.enumeration);
    std::vector<LatticePoint> interior;
    for (std::size_t k = 0; k < A.size(); ++k)
        if (A.interior_mask[k]) interior.push_back(A.points[k]);
    if (interior.empty()) throw NoInteriorPoints();
    for (const auto& f : facets(p)) {
        const auto dist = facet_distance(f, interior);
        if (dist != 1) throw HypothesisViolated(f, dist);
    }

    const std::size_t n = A.size();
    if (binomial(static_cast<long>(n), d + 1) > Integer(static_cast<unsigned long>(opts.candidate_budget)))
        throw CandidateBudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(d + 1) +
                                      ") candidate cells exceed budget " +
                                      std::to_string(opts.candidate_budget));

    std::vector<std::int64_t> lift_b(n), lift_a(n);
    for (std::size_t k = 0; k < n; ++k) {
        lift_b[k] = A.interior_mask[k] ? 0 : 1;
        lift_a[k] = alcove_lift(A.points[k]);
    }

    LiftedHyperplane plane(d);
    std::vector<std::size_t> pick(d + 1);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<const LatticePoint*> pts(d + 1);
    std::vector<std::int64_t> hb(d + 1), ha(d + 1);
    std::vector<char> chosen(n, 0);
    std::vector<Simplex> cells;
    if (n < d + 1) return assemble(d, {});
    while (true) {
        for (std::size_t r = 0; r <= d; ++r) {
            pts[r] = &A.points[pick[r]];
            hb[r] = lift_b[pick[r]];
            ha[r] = lift_a[pick[r]];
            chosen[pick[r]] = 1;
        }
        if (plane.solve(pts, hb, ha) && plane.det() != 0) {
            bool lower = true;
            bool touching = false;
            for (std::size_t q = 0; q < n && lower; ++q) {
                if (chosen[q]) continue;
                const i128 eb = plane.excess(0, A.points[q], lift_b[q]);
                if (eb < 0) lower = false;
                else if (eb == 0) {
                    const i128 ea = plane.excess(1, A.points[q], lift_a[q]);
                    if (ea < 0) lower = false;
                    else if (ea == 0) touching = true;
                }
            }
            if (lower) {
                if (touching) throw NonGenericLifting("lifted lattice points are not in general position");
                if (plane.det() != 1 && plane.det() != -1)
                    throw NonGenericLifting("boundary-compatible triangulation produced a non-unimodular cell");
                std::vector<LatticePoint> verts;
                for (auto* v : pts) verts.push_back(*v);
                cells.push_back(make_simplex(std::move(verts)));
            }
        }
        for (std::size_t r = 0; r <= d; ++r) chosen[pick[r]] = 0;
        // next combination
        std::size_t r = d + 1;
        while (r > 0 && pick[r - 1] == n - (d + 1) + (r - 1)) --r;
        if (r == 0) break;
        ++pick[r - 1];
        for (std::size_t s = r; s <= d; ++s) pick[s] = pick[s - 1] + 1;
    }
    return assemble(d, std::move(cells));
}

LatticePoint FacetProjection::project(const LatticePoint& x) const {
    LatticePoint y;
    y.reserve(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i + 1 != dropped) y.push_back(x[i]);
    return y;
}

FacetProjection facet_polytope(const AlcovedPolytope& p, const Constraint& facet) {
    if (p.dim() < 2) throw InvalidArgument("facet polytopes need dimension >= 2");
    // x_dropped = x_ref + offset on the facet
    const std::size_t dropped = facet.i != 0 ? facet.i : facet.j;
    const std::size_t ref = facet.i != 0 ? facet.j : 0;
    const Coord offset = facet.i != 0 ? facet.bound : -facet.bound;
    auto reindex = [&](std::size_t idx) { return idx > dropped ? idx - 1 : idx; };
    std::vector<Constraint> cs;
    for (auto c : p.hrep().constraints()) {
        if (c.i == dropped) {
            c.i = ref;
            c.bound = checked_add(c.bound, -offset);
        }
        if (c.j == dropped) {
            c.j = ref;
            c.bound = checked_add(c.bound, offset);
        }
        if (c.i == c.j) {
            if (c.bound < 0) throw Infeasible();
            continue;
        }
        cs.push_back({reindex(c.i), reindex(c.j), c.bound});
    }
    return FacetProjection{validate(cs, p.dim() - 1), dropped};
}

std::vector<Simplex> BoundaryComplexReport::boundary_simplices() const {
    std::vector<Simplex> out;
    for (const auto& f : facets) out.insert(out.end(), f.simplices.begin(), f.simplices.end());
    return sorted_unique(std::move(out));
}

BoundaryComplexReport induced_boundary_complex(const Triangulation& t, const AlcovedPolytope& p,
                                               TriangulationOptions opts) {
    const std::size_t d = p.dim();
    BoundaryComplexReport report;
    const auto fs = facets(p);
    for (const auto& f : fs) report.facets.push_back({f, {}, 0, 0});

    std::vector<char> on_boundary(t.vertex_set.size());
    for (std::size_t k = 0; k < t.vertex_set.size(); ++k)
        on_boundary[k] = !contains(p.hrep(), t.vertex_set[k], true);

    for (const auto& key : all_faces(t)) {
        // Only proper faces can lie on the boundary; a full cell never does.
        if (key.size() > d) continue;
        if (!std::all_of(key.begin(), key.end(), [&](std::uint32_t v) { return on_boundary[v]; })) continue;
        std::optional<std::size_t> home;
        for (std::size_t f = 0; f < fs.size() && !home; ++f) {
            const bool tight = std::all_of(key.begin(), key.end(), [&](std::uint32_t v) {
                return fs[f].lhs(t.vertex_set[v]) == fs[f].bound;
            });
            if (tight) home = f;
        }
        std::vector<LatticePoint> verts;
        for (auto v : key) verts.push_back(t.vertex_set[v]);
        if (!home) {
            report.interior_faces.push_back(make_simplex(std::move(verts)));
            continue;
        }
        if (key.size() == d) report.facets[*home].simplices.push_back(make_simplex(std::move(verts)));
    }
    std::sort(report.interior_faces.begin(), report.interior_faces.end());

    report.covers = true;
    for (auto& fc : report.facets) {
        std::sort(fc.simplices.begin(), fc.simplices.end());
        if (d == 1) {
            fc.covered_volume = static_cast<std::int64_t>(fc.simplices.size());
            fc.facet_volume = 1;
        } else {
            const FacetProjection proj = facet_polytope(p, fc.facet);
            for (const auto& s : fc.simplices) {
                std::vector<LatticePoint> pv;
                for (const auto& v : s.vertices) pv.push_back(proj.project(v));
                fc.covered_volume += Integer(abs(edge_determinant(make_simplex(std::move(pv))))).get_si();
            }
            fc.facet_volume = static_cast<std::int64_t>(
                alcove_triangulation(proj.polytope, opts).maximal_simplices.size());
        }
        report.covers = report.covers && fc.covered_volume == fc.facet_volume;
    }
    report.triangulates_boundary = report.covers && report.interior_faces.empty();
    return report;
}

bool facet_restrictions_are_alcoved(const Triangulation& t, const AlcovedPolytope& p,
                                    TriangulationOptions opts) {
    if (p.dim() == 1) return true;
    const auto report = induced_boundary_complex(t, p, opts);
    for (const auto& fc : report.facets) {
        const FacetProjection proj = facet_polytope(p, fc.facet);
        std::vector<Simplex> projected;
        for (const auto& s : fc.simplices) {
            std::vector<LatticePoint> pv;
            for (const auto& v : s.vertices) pv.push_back(proj.project(v));
            projected.push_back(make_simplex(std::move(pv)));
        }
        std::sort(projected.begin(), projected.end());
        if (projected != alcove_triangulation(proj.polytope, opts).maximal_simplices) return false;
    }
    return true;
}

}  // namespace alcoved
