#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wd {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

// Runs the eight acceptance criteria, printing one pass/fail line per
// criterion to `out` as they complete.  Returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

} // namespace wd
