#pragma once

// Seeded random scans over alcoved polytopes: per-instance theorem checks and
// a deterministic JSON report.

#include "alcoved/analysis.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace alcoved {

enum class Check { Unimodal, HibiStanley, Distance, Hypothesis, Symmetry };

std::string to_string(Check c);
/// Throws InvalidArgument for unknown names.
Check parse_check(const std::string& name);
std::set<Check> all_checks();

struct ScanConfig {
    std::size_t dim = 3;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool small = false;
    std::set<Check> checks = all_checks();
    std::size_t jobs = 1;
    bool timestamps = false;
    EnumerationOptions enumeration{};
};

struct ScanRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::size_t dim = 0;
    HRep hrep;
    std::optional<HStarVector> hstar;
    std::optional<Integer> lattice_points;
    std::optional<Integer> interior_points;
    std::optional<bool> unimodal;
    std::vector<std::size_t> peak_indices;
    std::optional<bool> peak_at_lower_middle;
    std::optional<bool> peak_at_upper_middle;
    std::optional<std::int64_t> max_facet_distance;
    std::optional<bool> hypothesis_ok;
    std::optional<bool> hibi_stanley_ok;
    std::optional<bool> symmetry_ok;  // palindromic h*
    std::optional<bool> reflexive;
    std::optional<double> wall_time;
    std::optional<std::string> error;
    /// Each entry names a theorem the instance contradicts.
    std::vector<std::string> violations;
    /// Notable but not contradictory outcomes (e.g. peak away from the middle).
    std::vector<std::string> findings;
};

struct ScanSummary {
    std::size_t instances = 0;
    std::size_t unimodal = 0;
    std::size_t non_unimodal = 0;
    std::size_t hypothesis_ok = 0;
    std::size_t reflexive = 0;
    std::size_t symmetric = 0;
    std::size_t symmetry_inconclusive = 0;  // palindromic without detected reflexivity
    std::size_t hibi_stanley_failures = 0;
    std::size_t with_interior_points = 0;
    std::optional<std::int64_t> max_facet_distance;
    std::size_t errors = 0;
    std::size_t theorem_violations = 0;
    std::size_t findings = 0;
};

struct ScanReport {
    ScanConfig config;
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

/// Runs every check in config on one instance. Budget errors are stored in
/// record.error.
ScanRecord scan_instance(const AlcovedPolytope& p, std::size_t index, std::uint64_t seed,
                         const std::set<Check>& checks, const EnumerationOptions& opts);

/// Instance i is random_alcoved(dim, derive_seed(seed, i), small). Records are
/// ordered by index regardless of jobs.
ScanReport run_scan(const ScanConfig& config);

ScanSummary summarize(const std::vector<ScanRecord>& records);

std::string scan_report_json(const ScanReport& report);
std::string scan_summary_text(const ScanReport& report);

}  // namespace alcoved
