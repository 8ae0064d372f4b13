// alcoved: generate, analyse, scan and triangulate alcoved polytopes.
//
// Exit codes: 0 ok, 1 usage or I/O, 2 hypothesis diagnostic, 3 theorem violation.

#include "alcoved/errors.hpp"
#include "alcoved/polytope_file.hpp"
#include "alcoved/scan.hpp"
#include "alcoved/triangulation.hpp"
#include "alcoved/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace alcoved;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitViolation = 3;

constexpr std::size_t kAlcoveDimLimit = 6;
constexpr std::size_t kBoundaryDimLimit = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out) throw UsageError("write failed: " + path);
}

ordered_json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json points_json(const std::vector<LatticePoint>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

std::string tuple(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s + ")";
}

template <typename V>
std::string vec_text(const V& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ")";
    return os.str();
}

std::vector<AlcovedPolytope> load(const std::string& path) {
    std::vector<AlcovedPolytope> out;
    std::size_t n = 0;
    for (const auto& rec : read_polytope_file(path)) {
        ++n;
        try {
            out.push_back(validate(rec.hrep));
        } catch (const Error& e) {
            throw ParseError(path + ": record " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

std::set<Check> parse_checks(const std::vector<std::string>& names) {
    if (names.empty()) return all_checks();
    std::set<Check> out;
    for (const auto& n : names) out.insert(parse_check(n));
    return out;
}

// --- gen --------------------------------------------------------------------

int cmd_gen(std::size_t dim, std::size_t count, std::uint64_t seed, bool small, const std::string& out) {
    if (dim < 2) throw UsageError("gen needs --dim >= 2");
    if (count < 1) throw UsageError("gen needs --count >= 1");
    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
        const Seed s = derive_seed(Seed{seed}, i);
        const auto p = random_alcoved(dim, s, small);
        text += serialize_polytope({p.hrep(), s.value, small ? "random_alcoved_small" : "random_alcoved",
                                    std::nullopt}) +
                "\n";
    }
    if (out.empty()) std::cout << text;
    else write_text(out, text);
    return kExitOk;
}

// --- hstar ------------------------------------------------------------------

int cmd_hstar(const std::string& in, const std::string& out, const EnumerationOptions& eopts) {
    const auto polys = load(in);
    std::ostringstream text;
    ordered_json records = ordered_json::array();
    for (const auto& p : polys) {
        const std::size_t d = p.dim();
        const Polynomial ehr = ehrhart_polynomial(p, eopts);
        const HStarVector h = ehr_to_hstar(ehr, d);
        const auto u = is_unimodal(h);
        const bool palindromic = hstar_symmetry(h);
        text << "dim " << d << "\n"
             << "  ehrhart   L(t) = " << ehr.to_string() << "\n"
             << "  h*        " << h.to_string() << "\n"
             << "  unimodal  " << (u.unimodal ? "yes" : "no") << ", peaks " << vec_text(u.peak_indices);
        std::optional<PeakReport> peak;
        if (u.unimodal) {
            peak = peak_location(h, d);
            text << (peak->at_lower_middle || peak->at_upper_middle ? " (middle)" : " (off middle)");
        }
        text << "\n  palindromic " << (palindromic ? "yes" : "no") << "\n";
        ordered_json j;
        j["dim"] = d;
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : ehr.coeffs()) coeffs.push_back(c.get_str());
        j["ehrhart"] = coeffs;
        ordered_json hs = ordered_json::array();
        for (const auto& e : h.entries) hs.push_back(integer_json(e));
        j["hstar"] = hs;
        j["unimodal"] = u.unimodal;
        j["peak_indices"] = u.peak_indices;
        if (peak) {
            j["peak_at_lower_middle"] = peak->at_lower_middle;
            j["peak_at_upper_middle"] = peak->at_upper_middle;
        }
        j["palindromic"] = palindromic;
        records.push_back(std::move(j));
    }
    if (!out.empty()) write_text(out, records.dump(2) + "\n");
    std::cout << text.str();
    return kExitOk;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(ScanConfig cfg, const std::string& out) {
    if (cfg.dim < 2) throw UsageError("scan needs --dim >= 2");
    if (cfg.count < 1) throw UsageError("scan needs --count >= 1");
    const ScanReport report = run_scan(cfg);
    if (!out.empty()) write_text(out, scan_report_json(report));
    std::cout << scan_summary_text(report);
    return report.summary.theorem_violations ? kExitViolation : kExitOk;
}

// --- triangulate ------------------------------------------------------------

int cmd_triangulate(const std::string& in, const std::string& method, const std::string& out,
                    std::optional<std::uint64_t> budget) {
    const bool boundary = method == "boundary";
    const auto polys = load(in);
    TriangulationOptions topts;
    if (budget) {
        topts.cell_budget = topts.candidate_budget = *budget;
        topts.enumeration.budget = *budget;
    }
    const std::size_t limit = boundary ? kBoundaryDimLimit : kAlcoveDimLimit;
    for (const auto& p : polys) {
        if (p.dim() <= limit) continue;
        if (!budget)
            throw UsageError("dimension " + std::to_string(p.dim()) + " exceeds the default limit " +
                             std::to_string(limit) + " for method " + method + "; pass --budget to override");
        std::cerr << "warning: dimension " << p.dim() << " exceeds the default limit " << limit
                  << "; running with budget " << *budget << "\n";
    }
    std::ostringstream text;
    ordered_json records = ordered_json::array();
    for (const auto& p : polys) {
        const std::size_t d = p.dim();
        const Triangulation t = boundary ? boundary_compatible_triangulation(p, topts) : alcove_triangulation(p, topts);
        const FVector f = f_vector(t);
        const HVector h = h_vector(f, d);
        text << "dim " << d << ", method " << method << ", " << t.maximal_simplices.size() << " cells\n";
        ordered_json cells = ordered_json::array();
        for (const auto& s : t.maximal_simplices) {
            text << " ";
            for (const auto& v : s.vertices) text << " " << tuple(v);
            text << "\n";
            cells.push_back(points_json(s.vertices));
        }
        text << "  f-vector " << vec_text(f.f) << "\n  h-vector " << vec_text(h.h) << "\n";
        ordered_json j;
        j["dim"] = d;
        j["method"] = method;
        j["cells"] = std::move(cells);
        j["f_vector"] = f.f;
        j["h_vector"] = h.h;
        if (boundary) {
            const auto bc = induced_boundary_complex(t, p, topts);
            const bool alcoved_facets = facet_restrictions_are_alcoved(t, p, topts);
            text << "  boundary complex: " << bc.boundary_simplices().size() << " faces on " << bc.facets.size()
                 << " facets, " << (bc.triangulates_boundary ? "triangulates" : "does NOT triangulate")
                 << " the boundary; facet restrictions " << (alcoved_facets ? "are" : "are NOT")
                 << " alcove triangulations\n";
            ordered_json facets = ordered_json::array();
            for (const auto& fc : bc.facets) {
                ordered_json fj;
                fj["facet"] = {fc.facet.i, fc.facet.j, fc.facet.bound};
                fj["faces"] = fc.simplices.size();
                fj["covered_volume"] = fc.covered_volume;
                fj["facet_volume"] = fc.facet_volume;
                facets.push_back(std::move(fj));
            }
            ordered_json bj;
            bj["facets"] = std::move(facets);
            bj["interior_faces"] = bc.interior_faces.size();
            bj["triangulates_boundary"] = bc.triangulates_boundary;
            bj["facet_restrictions_alcoved"] = alcoved_facets;
            j["boundary"] = std::move(bj);
        }
        records.push_back(std::move(j));
    }
    if (!out.empty()) write_text(out, records.dump(2) + "\n");
    std::cout << text.str();
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(std::size_t dim_max, std::size_t jobs) {
    if (dim_max < 1 || dim_max > kMaxVerifyDim)
        throw UsageError("verify supports --dim-max 1.." + std::to_string(kMaxVerifyDim) +
                         "; beyond that the d! alcove cells and the lattice-point enumeration exceed the "
                         "default budget of " + std::to_string(kDefaultEnumerationBudget) + " nodes");
    const auto results = run_acceptance({dim_max, jobs}, &std::cout);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.passed;
    std::cout << (failed ? std::to_string(failed) + " of " + std::to_string(results.size()) + " criteria failed"
                         : "all " + std::to_string(results.size()) + " criteria passed")
              << "\n";
    return failed ? kExitUsage : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alcoved lattice polytopes: Ehrhart theory, triangulations and theorem scans"};
    app.require_subcommand(1);

    std::size_t dim = 3, count = 1, jobs = 1, dim_max = 3;
    std::uint64_t seed = 0;
    bool small = false, no_timestamps = false;
    std::string out, in, method = "alcove";
    std::vector<std::string> checks;
    std::optional<std::uint64_t> budget;

    auto* gen = app.add_subcommand("gen", "Write random alcoved polytopes, one JSON record per line");
    gen->add_option("--dim", dim, "Dimension (>= 2)")->required();
    gen->add_option("--count", count, "Number of instances");
    gen->add_option("--seed", seed, "Base seed; instance i uses SplitMix64(seed + i)");
    gen->add_flag("--small", small, "Use the small generator");
    gen->add_option("--out", out, "Output file (default: standard output)");

    auto* hs = app.add_subcommand("hstar", "Ehrhart polynomial and h*-vector of each polytope in a file");
    hs->add_option("input", in, "Polytope file")->required();
    hs->add_option("--out", out, "JSON output file");
    hs->add_option("--budget", budget, "Enumeration node budget");

    auto* scan = app.add_subcommand("scan", "Check theorems on seeded random polytopes");
    scan->add_option("--dim", dim, "Dimension (>= 2)")->required();
    scan->add_option("--count", count, "Number of instances");
    scan->add_option("--seed", seed, "Base seed");
    scan->add_flag("--small", small, "Use the small generator");
    scan->add_option("--checks", checks, "Comma-separated: unimodal, hibi-stanley, distance, hypothesis, symmetry")
        ->delimiter(',');
    scan->add_option("--jobs", jobs, "Worker threads");
    scan->add_option("--out", out, "JSON report file");
    scan->add_option("--budget", budget, "Enumeration node budget per instance");
    scan->add_flag("--no-timestamps", no_timestamps, "Omit wall times from the report");

    auto* tri = app.add_subcommand("triangulate", "Alcove or boundary-compatible triangulation");
    tri->add_option("input", in, "Polytope file")->required();
    tri->add_option("--method", method, "alcove or boundary")->check(CLI::IsMember({"alcove", "boundary"}));
    tri->add_option("--out", out, "JSON output file");
    tri->add_option("--budget", budget, "Cell and candidate budget; also lifts the dimension limit");

    auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
    ver->add_option("--dim-max", dim_max, "Largest dimension (1..5)");
    ver->add_option("--jobs", jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    EnumerationOptions eopts;
    if (budget) eopts.budget = *budget;
    try {
        if (*gen) return cmd_gen(dim, count, seed, small, out);
        if (*hs) return cmd_hstar(in, out, eopts);
        if (*scan) {
            ScanConfig cfg;
            cfg.dim = dim;
            cfg.count = count;
            cfg.seed = seed;
            cfg.small = small;
            cfg.checks = parse_checks(checks);
            cfg.jobs = jobs;
            cfg.timestamps = !no_timestamps;
            cfg.enumeration = eopts;
            return cmd_scan(cfg, out);
        }
        if (*tri) return cmd_triangulate(in, method, out, budget);
        if (*ver) return cmd_verify(dim_max, jobs);
    } catch (const HypothesisViolated& e) {
        std::cerr << "hypothesis not satisfied: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return kExitViolation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
