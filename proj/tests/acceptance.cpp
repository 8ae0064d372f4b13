// Runs every acceptance criterion at full size; one line per criterion.

#include "alcoved/verify.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    alcoved::VerifyOptions opts;
    if (argc > 1) opts.dim_max = std::strtoul(argv[1], nullptr, 10);
    const auto results = alcoved::run_acceptance(opts, &std::cout);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.passed;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
