// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Seed fixed so the run is reproducible.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "sfkin/verify.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
    const auto results = sfkin::verify::run_acceptance(seed);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("%s %-4s %-62s worst %.3e tol %.3e %s\n", r.pass ? "PASS" : "FAIL",
                    r.id.c_str(), r.name.c_str(), r.worst, r.tolerance, r.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return all_pass ? 0 : 1;
}
