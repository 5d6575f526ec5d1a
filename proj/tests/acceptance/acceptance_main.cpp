// One line per acceptance criterion; nonzero exit if any criterion fails.
#include <cstdlib>
#include <iostream>

#include "gk/verification.hpp"

int main()
{
    const char* env = std::getenv("GK_SEED");
    const std::uint64_t seed = env && *env ? std::strtoull(env, nullptr, 10) : 20240601ULL;
    gk::oracle::OracleConfig cfg;  // depth 60, tolerance 1e-10, grid {1, 3/2, 2, 3}
    const auto results = gk::verify::run_acceptance(cfg, seed);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << gk::verify::format_line(r);
        failed += !r.pass();
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
