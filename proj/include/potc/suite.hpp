#ifndef POTC_SUITE_HPP
#define POTC_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "potc/graph.hpp"

namespace potc {

struct SuiteOptions {
    std::uint64_t seed = 42;
    bool quick = false;  // smaller corpora, same checks
    int only = 0;        // 0 runs everything, otherwise one criterion id
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // counts and bounds only, so reports are byte-stable
    std::string rerun;   // command line that reproduces this check
    double seconds = 0;  // wall time, shown on stdout but kept out of reports
};

// Runs the acceptance battery and prints one pass/fail line per criterion
// to `log` as results come in. Every tolerance is pinned inside.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt,
                                            std::ostream& log);

// Host used by the extension tests: a seven-vertex path whose two interior
// anchors have degree five and whose middle vertices have degree two.
Graph seven_path_host();

}  // namespace potc

#endif
