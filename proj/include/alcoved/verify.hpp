#pragma once

// The end-to-end self test: every acceptance criterion, each with its own
// time limit, reported as one pass/fail line.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace alcoved {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;  // seconds; 0 = none
};

struct VerifyOptions {
    /// Largest dimension exercised. Values above kMaxVerifyDim are refused.
    std::size_t dim_max = 5;
    std::size_t jobs = 4;
};

inline constexpr std::size_t kMaxVerifyDim = 5;

/// Runs all criteria, streaming one line per criterion to `log` if given.
/// Throws InvalidArgument when dim_max is outside 1..kMaxVerifyDim.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, std::ostream* log = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace alcoved
