#include "alcoved/verify.hpp"

#include "alcoved/errors.hpp"
#include "alcoved/scan.hpp"
#include "alcoved/triangulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace alcoved {

namespace {

constexpr std::uint64_t kBetkeMcMullenSeed = 2;
constexpr std::uint64_t kScanSeed = 1;
constexpr std::size_t kBetkeMcMullenInstances = 100;
constexpr std::size_t kScanInstancesPerDim = 50;
constexpr std::size_t kReflexiveInstances = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= static_cast<unsigned long>(k);
    return r;
}

// Collects failure messages; a criterion passes when none were recorded.
class Ledger {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        if (!ok) ++count_;
    }
    bool ok() const { return count_ == 0; }
    std::string text() const {
        std::string out;
        for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
        if (count_ > failures_.size()) out += "; ... (" + std::to_string(count_) + " failures)";
        return out;
    }

private:
    std::vector<std::string> failures_;
    std::size_t count_ = 0;
};

struct Corpus {
    std::vector<ScanReport> scans;  // one per dimension
    std::vector<std::string> serial_json;
};

AlcovedPolytope regenerate(const ScanRecord& r, bool small) {
    return random_alcoved(r.dim, Seed{r.seed}, small);
}

std::string bm_report(std::size_t dim_max, std::size_t jobs, Ledger* ledger) {
    std::vector<std::size_t> dims;
    for (std::size_t d = 2; d <= std::min<std::size_t>(4, dim_max); ++d) dims.push_back(d);
    if (dims.empty()) return "";
    std::vector<std::string> lines(kBetkeMcMullenInstances);
    std::vector<std::string> errors(kBetkeMcMullenInstances);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < kBetkeMcMullenInstances; i = next++) {
            const std::size_t d = dims[i % dims.size()];
            const Seed s = derive_seed(Seed{kBetkeMcMullenSeed}, i);
            const AlcovedPolytope p = random_alcoved(d, s, true);
            const HStarVector hs = hstar(p);
            const HVector hv = h_vector(alcove_triangulation(p));
            bool match = hv.h.size() == d + 2 && hv.h[d + 1] == 0;
            for (std::size_t k = 0; match && k <= d; ++k) match = hs[k] == hv.h[k];
            std::ostringstream os;
            os << "{\"index\":" << i << ",\"seed\":" << s.value << ",\"dim\":" << d << ",\"hstar\":\""
               << hs.to_string() << "\",\"h\":\"(";
            for (std::size_t k = 0; k < hv.h.size(); ++k) os << (k ? "," : "") << hv.h[k];
            os << ")\",\"match\":" << (match ? "true" : "false") << "}";
            lines[i] = os.str();
            if (!match) errors[i] = "instance " + std::to_string(i) + ": h*" + hs.to_string() + " vs h" + lines[i];
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < std::max<std::size_t>(1, jobs); ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out += lines[i] + "\n";
        if (ledger) ledger->require(errors[i].empty(), errors[i]);
    }
    return out;
}

ScanConfig scan_config(std::size_t d, std::size_t jobs) {
    ScanConfig cfg;
    cfg.dim = d;
    cfg.count = kScanInstancesPerDim;
    cfg.seed = kScanSeed;
    cfg.small = false;
    cfg.checks = all_checks();
    cfg.jobs = jobs;
    cfg.timestamps = false;
    return cfg;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << " s";
    if (r.time_limit > 0) os << ", limit " << r.time_limit << " s";
    os << ")";
    if (!r.detail.empty()) os << ": " << r.detail;
    return os.str();
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, std::ostream* log) {
    if (opts.dim_max < 1 || opts.dim_max > kMaxVerifyDim)
        throw InvalidArgument("verify supports dim-max 1.." + std::to_string(kMaxVerifyDim) +
                              ": lattice-point enumeration and d! alcove cells make larger dimensions "
                              "infeasible at desk scale");
    const std::size_t dmax = opts.dim_max;
    const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
    std::vector<CriterionResult> results;

    auto run = [&](int id, std::string name, double limit, const std::function<std::string(Ledger&)>& body) {
        CriterionResult r;
        r.id = id;
        r.name = std::move(name);
        r.time_limit = limit;
        Ledger ledger;
        const auto t0 = Clock::now();
        std::string note;
        try {
            note = body(ledger);
        } catch (const std::exception& e) {
            ledger.require(false, std::string("exception: ") + e.what());
        }
        r.seconds = seconds_since(t0);
        if (limit > 0)
            ledger.require(r.seconds < limit, "took " + std::to_string(r.seconds) + " s");
        r.passed = ledger.ok();
        r.detail = r.passed ? note : ledger.text();
        if (log) *log << format_result(r) << std::endl;
        results.push_back(r);
    };

    // 1. Q_d battery
    run(1, "Q_d battery, d = 1.." + std::to_string(dmax), 30, [&](Ledger& L) {
        for (std::size_t d = 1; d <= dmax; ++d) {
            const auto q = make_qd(d);
            const std::string tag = "Q_" + std::to_string(d) + ": ";
            const PointSet pts = lattice_points(q);
            L.require(pts.size() == (std::size_t{1} << (d + 1)) - 1, tag + "lattice point count");
            const auto interior = interior_lattice_points(q);
            L.require(interior.size() == 1 && interior[0] == LatticePoint(d, 0), tag + "interior point");
            L.require(facets(q).size() == 2 * binomial(static_cast<long>(d + 1), 2).get_ui(), tag + "facet count");
            std::vector<Rational> cube(d + 2);
            for (std::size_t k = 0; k <= d + 1; ++k) cube[k] = Rational(binomial(static_cast<long>(d + 1), k));
            HStarVector cube_h = ehr_to_hstar(Polynomial(cube), d + 1);
            cube_h.entries.resize(d + 1);
            L.require(hstar(q) == cube_h, tag + "h* differs from the (d+1)-cube");
            L.require(Integer(static_cast<unsigned long>(alcove_triangulation(q).maximal_simplices.size())) ==
                          factorial(d + 1),
                      tag + "alcove count");
        }
        return std::string();
    });

    // 2. Betke-McMullen
    std::string bm_first;
    run(2, "Betke-McMullen: alcove h-vector equals h* on 100 small random instances", 300, [&](Ledger& L) {
        if (dmax < 2) return std::string("skipped (dim-max < 2)");
        bm_first = bm_report(dmax, jobs, &L);
        return std::string("100 instances, d in {2,3,4}");
    });

    // 3. Unimodality scan (the corpus for 4, 5, 7, 8, 9)
    Corpus corpus;
    run(3, "unimodality scan, 50 instances per d = 3.." + std::to_string(std::min<std::size_t>(5, dmax)), 600,
        [&](Ledger& L) {
            std::size_t total = 0, hyp = 0;
            for (std::size_t d = 3; d <= std::min<std::size_t>(5, dmax); ++d) {
                corpus.scans.push_back(run_scan(scan_config(d, jobs)));
                for (const auto& r : corpus.scans.back().records) {
                    ++total;
                    const std::string tag = "d=" + std::to_string(d) + " #" + std::to_string(r.index);
                    L.require(!r.error, tag + " error: " + r.error.value_or(""));
                    L.require(r.unimodal.value_or(false), tag + " not unimodal");
                    if (r.hypothesis_ok.value_or(false)) {
                        ++hyp;
                        L.require(r.unimodal.value_or(false), tag + " hypothesis ok but not unimodal");
                    }
                    L.require(r.violations.empty(), tag + " theorem violation");
                }
            }
            if (corpus.scans.empty()) return std::string("skipped (dim-max < 3)");
            return std::to_string(total) + " unimodal, " + std::to_string(hyp) + " satisfy the distance-1 hypothesis";
        });

    // 4. Hibi-Stanley
    run(4, "Hibi-Stanley inequalities on the scan corpus", 0, [&](Ledger& L) {
        std::size_t n = 0;
        for (const auto& scan : corpus.scans)
            for (const auto& r : scan.records) {
                L.require(r.hstar.has_value(), "missing h*");
                if (!r.hstar) continue;
                const auto hs = hibi_stanley_check(*r.hstar, r.dim);
                L.require(hs.ok, "d=" + std::to_string(r.dim) + " #" + std::to_string(r.index) + " h*" +
                                     r.hstar->to_string());
                ++n;
            }
        return std::to_string(n) + " h*-vectors checked";
    });

    // 5. Distance theorem
    run(5, "facet distance <= d-1, sharp examples attain d-1", 120, [&](Ledger& L) {
        std::size_t n = 0;
        for (const auto& scan : corpus.scans)
            for (const auto& r : scan.records) {
                if (!r.max_facet_distance) continue;
                ++n;
                L.require(*r.max_facet_distance <= static_cast<std::int64_t>(r.dim) - 1,
                          "d=" + std::to_string(r.dim) + " #" + std::to_string(r.index) + " distance " +
                              std::to_string(*r.max_facet_distance));
            }
        for (std::size_t d = 2; d <= dmax; ++d) {
            const auto rep = max_facet_distance(make_sharp_distance_example(d));
            L.require(rep.max_distance == static_cast<std::int64_t>(d) - 1,
                      "sharp example d=" + std::to_string(d) + " distance " +
                          std::to_string(rep.max_distance.value_or(-1)));
        }
        return std::to_string(n) + " instances with interior points";
    });

    // 6. Boundary-compatible triangulation
    run(6, "boundary-compatible triangulation", 120, [&](Ledger& L) {
        std::vector<std::pair<std::string, AlcovedPolytope>> cases;
        if (dmax >= 2) {
            const Interval side{-1, 1};
            const Interval sq[] = {side, side};
            cases.emplace_back("[-1,1]^2", make_box(sq));
            cases.emplace_back("Q_2", make_qd(2));
        }
        if (dmax >= 3) {
            cases.emplace_back("Q_3", make_qd(3));
            std::size_t found = 0;
            for (std::size_t i = 0; found < kReflexiveInstances && i < 100000; ++i) {
                const Seed s = derive_seed(Seed{kScanSeed}, i);
                const auto p = random_alcoved(3, s, false);
                if (is_reflexive(p)) {
                    cases.emplace_back("d=3 scan #" + std::to_string(i), p);
                    ++found;
                }
            }
            L.require(found == kReflexiveInstances, "not enough reflexive d=3 instances");
        }
        for (const auto& [label, p] : cases) {
            const auto t = boundary_compatible_triangulation(p);
            bool unimodular = true;
            for (const auto& s : t.maximal_simplices) unimodular = unimodular && is_unimodular(s);
            L.require(unimodular, label + ": non-unimodular cell");
            L.require(Integer(static_cast<unsigned long>(t.maximal_simplices.size())) == hstar(p).sum(),
                      label + ": cell count differs from normalized volume");
            const auto bc = induced_boundary_complex(t, p);
            L.require(bc.triangulates_boundary, label + ": induced complex does not triangulate the boundary");
            L.require(facet_restrictions_are_alcoved(t, p), label + ": facet restriction is not alcoved");
        }
        if (dmax >= 3) {
            bool raised = false;
            try {
                (void)boundary_compatible_triangulation(make_sharp_distance_example(3));
            } catch (const HypothesisViolated& e) {
                raised = e.facet() == Constraint{1, 0, 3} && e.distance() == 2;
            }
            L.require(raised, "sharp example d=3 must report facet x_1 <= 3 at distance 2");
        }
        return std::to_string(cases.size()) + " polytopes triangulated";
    });

    // 7. Hibi symmetry and Gorenstein index
    run(7, "reflexive => palindromic h*; chain simplex Gorenstein index d+1", 0, [&](Ledger& L) {
        std::size_t n = 0;
        for (const auto& scan : corpus.scans)
            for (const auto& r : scan.records)
                if (r.reflexive.value_or(false)) {
                    ++n;
                    L.require(r.symmetry_ok.value_or(false), "d=" + std::to_string(r.dim) + " #" +
                                                                 std::to_string(r.index) + " not palindromic");
                }
        for (std::size_t d = 1; d <= dmax; ++d) {
            ++n;
            L.require(hstar_symmetry(hstar(make_qd(d))), "Q_" + std::to_string(d) + " not palindromic");
        }
        for (std::size_t d = 2; d <= std::min<std::size_t>(4, dmax); ++d) {
            const auto g = gorenstein_index(make_scaled_chain_simplex(d, 1), d + 1);
            L.require(g == d + 1, "chain simplex d=" + std::to_string(d) + " Gorenstein index " +
                                      (g ? std::to_string(*g) : "none"));
        }
        return std::to_string(n) + " reflexive polytopes checked";
    });

    // 8. Ehrhart identities
    run(8, "Ehrhart identities and extrapolated counts", 0, [&](Ledger& L) {
        std::size_t n = 0;
        for (const auto& scan : corpus.scans)
            for (const auto& r : scan.records) {
                if (!r.hstar) continue;
                ++n;
                const std::size_t d = r.dim;
                const auto& h = *r.hstar;
                const auto p = regenerate(r, scan.config.small);
                const std::string tag = "d=" + std::to_string(d) + " #" + std::to_string(r.index);
                L.require(h[0] == 1, tag + " h*_0");
                L.require(h[1] == count_dilate(p, 1) - static_cast<unsigned long>(d + 1), tag + " h*_1");
                L.require(h[d] == count_interior_dilate(p, 1), tag + " h*_d");
                L.require(h.sum() == static_cast<unsigned long>(alcove_triangulation(p).maximal_simplices.size()),
                          tag + " sum h* vs alcove count");
                const Polynomial ehr = ehrhart_polynomial(p);
                for (std::size_t t = d + 1; t <= 2 * d + 1; ++t)
                    L.require(ehr(Rational(static_cast<unsigned long>(t))) == Rational(count_dilate(p, t)),
                              tag + " L(" + std::to_string(t) + ")");
            }
        return std::to_string(n) + " instances";
    });

    // 9. Peak location (findings only)
    run(9, "peak location of hypothesis instances", 0, [&](Ledger& L) {
        std::size_t n = 0, off = 0;
        std::map<std::size_t, std::size_t> lower, upper;
        for (const auto& scan : corpus.scans)
            for (const auto& r : scan.records) {
                if (!r.hypothesis_ok.value_or(false) || !r.unimodal.value_or(false)) continue;
                L.require(r.peak_at_lower_middle.has_value(), "missing peak report");
                ++n;
                if (r.peak_at_lower_middle.value_or(false)) ++lower[r.dim];
                if (r.peak_at_upper_middle.value_or(false)) ++upper[r.dim];
                if (!r.peak_at_lower_middle.value_or(false) && !r.peak_at_upper_middle.value_or(false)) ++off;
            }
        std::string note = std::to_string(n) + " instances";
        for (auto [d, c] : lower) note += ", d=" + std::to_string(d) + " lower-middle " + std::to_string(c);
        for (auto [d, c] : upper) note += ", d=" + std::to_string(d) + " upper-middle " + std::to_string(c);
        if (off) note += "; finding: " + std::to_string(off) + " peaks away from both middles";
        return note;
    });

    // 10. Determinism
    run(10, "determinism across jobs = 1 and 4", 0, [&](Ledger& L) {
        if (dmax >= 2) {
            const std::string serial = bm_report(dmax, 1, nullptr);
            const std::string parallel = bm_report(dmax, 4, nullptr);
            L.require(serial == parallel, "Betke-McMullen report differs between job counts");
            L.require(serial == bm_first, "Betke-McMullen report differs from the first run");
        }
        for (const auto& scan : corpus.scans) {
            const std::string first = scan_report_json(scan);
            for (std::size_t j : {std::size_t{1}, std::size_t{4}}) {
                const std::string again = scan_report_json(run_scan(scan_config(scan.config.dim, j)));
                L.require(again == first, "scan report d=" + std::to_string(scan.config.dim) +
                                              " differs with jobs=" + std::to_string(j));
            }
        }
        return std::string("reports byte-identical");
    });

    return results;
}

}  // namespace alcoved
