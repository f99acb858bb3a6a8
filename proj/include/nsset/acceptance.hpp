#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nsset {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    uint64_t seed = 0;
    bool skip_slow = false;  // skips only the n = 3 instance of criterion 9
};

// Runs the full acceptance suite; one result per criterion, ordered by id.
// When `progress` is set, a pass/fail line is printed as each criterion
// finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_result_line(const CriterionResult& r);

}  // namespace nsset
