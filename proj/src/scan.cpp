#include "alcoved/scan.hpp"

#include "alcoved/errors.hpp"
#include "alcoved/polytope_file.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace alcoved {

using nlohmann::ordered_json;

std::string to_string(Check c) {
    switch (c) {
        case Check::Unimodal: return "unimodal";
        case Check::HibiStanley: return "hibi-stanley";
        case Check::Distance: return "distance";
        case Check::Hypothesis: return "hypothesis";
        case Check::Symmetry: return "symmetry";
    }
    return "?";
}

Check parse_check(const std::string& name) {
    for (Check c : all_checks())
        if (to_string(c) == name) return c;
    throw InvalidArgument("unknown check '" + name +
                          "' (expected unimodal, hibi-stanley, distance, hypothesis, symmetry)");
}

std::set<Check> all_checks() {
    return {Check::Unimodal, Check::HibiStanley, Check::Distance, Check::Hypothesis, Check::Symmetry};
}

ScanRecord scan_instance(const AlcovedPolytope& p, std::size_t index, std::uint64_t seed,
                         const std::set<Check>& checks, const EnumerationOptions& opts) {
    ScanRecord r;
    r.index = index;
    r.seed = seed;
    r.dim = p.dim();
    r.hrep = p.hrep();
    const std::size_t d = p.dim();
    auto wants = [&](Check c) { return checks.count(c) > 0; };
    const bool need_hstar = wants(Check::Unimodal) || wants(Check::HibiStanley) || wants(Check::Symmetry);
    const bool need_distance = wants(Check::Distance) || wants(Check::Hypothesis) || wants(Check::Symmetry) ||
                               wants(Check::Unimodal);
    const auto start = std::chrono::steady_clock::now();
    try {
        if (need_distance) {
            const DistanceReport dr = facet_distances(p, opts);
            r.max_facet_distance = dr.max_distance;
            r.hypothesis_ok = main_theorem_hypothesis(dr);
            r.reflexive = dr.max_distance && *dr.max_distance == 1 &&
                          interior_lattice_points(p, opts).size() == 1;
            if (wants(Check::Distance) && dr.max_distance && *dr.max_distance > facet_distance_bound(d))
                r.violations.push_back("facet distance " + std::to_string(*dr.max_distance) + " exceeds " +
                                       std::to_string(facet_distance_bound(d)));
        }
        if (need_hstar) {
            r.hstar = hstar(p, opts);
            r.lattice_points = count_dilate(p, 1, opts);
            r.interior_points = count_interior_dilate(p, 1, opts);
            const auto u = is_unimodal(*r.hstar);
            r.symmetry_ok = hstar_symmetry(*r.hstar);
            if (wants(Check::Unimodal)) {
                r.unimodal = u.unimodal;
                r.peak_indices = u.peak_indices;
                if (u.unimodal) {
                    const PeakReport peak = peak_location(*r.hstar, d);
                    r.peak_at_lower_middle = peak.at_lower_middle;
                    r.peak_at_upper_middle = peak.at_upper_middle;
                    if (r.hypothesis_ok.value_or(false) && !peak.at_lower_middle && !peak.at_upper_middle)
                        r.findings.push_back("peak away from the middle entries");
                } else if (r.hypothesis_ok.value_or(false)) {
                    r.violations.push_back("non-unimodal h*-vector although every facet has distance 1");
                } else {
                    r.findings.push_back("non-unimodal h*-vector");
                }
            }
            if (wants(Check::HibiStanley)) {
                r.hibi_stanley_ok = hibi_stanley_check(*r.hstar, d).ok;
                if (!*r.hibi_stanley_ok) r.violations.push_back("Hibi-Stanley inequalities fail");
            }
            if (wants(Check::Symmetry) && r.reflexive.value_or(false) && !*r.symmetry_ok)
                r.violations.push_back("reflexive polytope with non-palindromic h*-vector");
        }
    } catch (const Error& e) {
        r.error = e.what();
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
    ScanSummary s;
    s.instances = records.size();
    for (const auto& r : records) {
        if (r.unimodal) ++(*r.unimodal ? s.unimodal : s.non_unimodal);
        if (r.hypothesis_ok.value_or(false)) ++s.hypothesis_ok;
        if (r.reflexive.value_or(false)) ++s.reflexive;
        if (r.symmetry_ok.value_or(false)) {
            ++s.symmetric;
            if (r.reflexive && !*r.reflexive) ++s.symmetry_inconclusive;
        }
        if (r.hibi_stanley_ok && !*r.hibi_stanley_ok) ++s.hibi_stanley_failures;
        if (r.max_facet_distance) {
            ++s.with_interior_points;
            s.max_facet_distance = std::max(s.max_facet_distance.value_or(0), *r.max_facet_distance);
        }
        if (r.error) ++s.errors;
        s.theorem_violations += r.violations.size();
        s.findings += r.findings.size();
    }
    return s;
}

ScanReport run_scan(const ScanConfig& config) {
    if (config.dim < 2) throw InvalidArgument("scan needs dim >= 2");
    if (config.count < 1) throw InvalidArgument("scan needs count >= 1");
    ScanReport report;
    report.config = config;
    report.records.resize(config.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.count; i = next++) {
            const Seed s = derive_seed(Seed{config.seed}, i);
            const AlcovedPolytope p = random_alcoved(config.dim, s, config.small);
            report.records[i] = scan_instance(p, i, s.value, config.checks, config.enumeration);
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, config.count));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    report.summary = summarize(report.records);
    return report;
}

namespace {

template <typename T>
ordered_json opt(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json hstar_json(const std::optional<HStarVector>& h) {
    if (!h) return nullptr;
    ordered_json arr = ordered_json::array();
    for (const auto& e : h->entries) {
        if (e.fits_slong_p()) arr.push_back(e.get_si());
        else arr.push_back(e.get_str());
    }
    return arr;
}

ordered_json integer_json(const std::optional<Integer>& v) {
    if (!v) return nullptr;
    if (v->fits_slong_p()) return v->get_si();
    return v->get_str();
}

}  // namespace

std::string scan_report_json(const ScanReport& report) {
    const auto& cfg = report.config;
    ordered_json j;
    j["command"] = "scan";
    j["dim"] = cfg.dim;
    j["count"] = cfg.count;
    j["seed"] = cfg.seed;
    j["small"] = cfg.small;
    ordered_json checks = ordered_json::array();
    for (Check c : cfg.checks) checks.push_back(to_string(c));
    j["checks"] = checks;
    ordered_json recs = ordered_json::array();
    for (const auto& r : report.records) {
        ordered_json o;
        o["index"] = r.index;
        o["seed"] = r.seed;
        o["dim"] = r.dim;
        o["hstar"] = hstar_json(r.hstar);
        o["lattice_points"] = integer_json(r.lattice_points);
        o["interior_points"] = integer_json(r.interior_points);
        o["unimodal"] = opt(r.unimodal);
        o["peak_indices"] = r.peak_indices;
        o["peak_at_lower_middle"] = opt(r.peak_at_lower_middle);
        o["peak_at_upper_middle"] = opt(r.peak_at_upper_middle);
        o["max_facet_distance"] = opt(r.max_facet_distance);
        o["hypothesis_ok"] = opt(r.hypothesis_ok);
        o["hibi_stanley_ok"] = opt(r.hibi_stanley_ok);
        o["symmetry_ok"] = opt(r.symmetry_ok);
        o["reflexive"] = opt(r.reflexive);
        if (cfg.timestamps) o["wall_time"] = opt(r.wall_time);
        o["error"] = opt(r.error);
        o["violations"] = r.violations;
        o["findings"] = r.findings;
        if (!r.violations.empty())
            o["instance"] = ordered_json::parse(serialize_polytope({r.hrep, r.seed, "random_alcoved", std::nullopt}));
        recs.push_back(std::move(o));
    }
    j["records"] = std::move(recs);
    const auto& s = report.summary;
    ordered_json sm;
    sm["instances"] = s.instances;
    sm["unimodal"] = s.unimodal;
    sm["non_unimodal"] = s.non_unimodal;
    sm["hypothesis_ok"] = s.hypothesis_ok;
    sm["reflexive"] = s.reflexive;
    sm["symmetric"] = s.symmetric;
    sm["symmetry_inconclusive"] = s.symmetry_inconclusive;
    sm["hibi_stanley_failures"] = s.hibi_stanley_failures;
    sm["with_interior_points"] = s.with_interior_points;
    sm["max_facet_distance"] = opt(s.max_facet_distance);
    sm["errors"] = s.errors;
    sm["theorem_violations"] = s.theorem_violations;
    sm["findings"] = s.findings;
    j["summary"] = std::move(sm);
    return j.dump(2) + "\n";
}

std::string scan_summary_text(const ScanReport& report) {
    const auto& s = report.summary;
    std::ostringstream os;
    os << "scanned " << s.instances << " alcoved polytopes of dimension " << report.config.dim
       << (report.config.small ? " (small generator)" : "") << ", seed " << report.config.seed << "\n";
    if (s.unimodal + s.non_unimodal > 0)
        os << "  unimodal h*: " << s.unimodal << ", non-unimodal: " << s.non_unimodal << "\n";
    os << "  with interior points: " << s.with_interior_points << ", hypothesis ok: " << s.hypothesis_ok
       << ", reflexive: " << s.reflexive << "\n";
    if (s.max_facet_distance)
        os << "  largest facet distance: " << *s.max_facet_distance << " (bound "
           << facet_distance_bound(report.config.dim) << ")\n";
    if (s.hibi_stanley_failures) os << "  Hibi-Stanley failures: " << s.hibi_stanley_failures << "\n";
    if (s.symmetry_inconclusive)
        os << "  palindromic h* without detected reflexivity: " << s.symmetry_inconclusive << "\n";
    if (s.errors) os << "  instances with errors: " << s.errors << "\n";
    if (s.findings) os << "  findings: " << s.findings << "\n";
    for (const auto& r : report.records) {
        for (const auto& f : r.findings)
            os << "  finding: instance " << r.index << " (seed " << r.seed << "): " << f
               << (r.hstar ? " h* = " + r.hstar->to_string() : "") << "\n";
        for (const auto& v : r.violations)
            os << "  THEOREM VIOLATION: instance " << r.index << " (seed " << r.seed << "): " << v << "\n"
               << "    " << serialize_polytope({r.hrep, r.seed, "random_alcoved", std::nullopt}) << "\n";
    }
    os << (s.theorem_violations ? "theorem violations found: " + std::to_string(s.theorem_violations)
                                : std::string("no theorem violations"))
       << "\n";
    return os.str();
}

}  // namespace alcoved
