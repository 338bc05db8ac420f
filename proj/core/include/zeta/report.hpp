#pragma once

// Report generation: runs every computation applicable to a problem input,
// verifies the generating-function identities behind the results, and
// renders a deterministic JSON document. Identical inputs produce
// byte-identical reports.

#include "zeta/problem.hpp"

#include <string>
#include <vector>

namespace zeta {

struct VerificationItem {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    std::string detail;
};

struct Report {
    std::string json_text;  // canonical rendering, trailing newline
    bool all_passed = false;
    std::vector<VerificationItem> checks;
};

// Deterministic; domain errors from the computing modules propagate as
// exceptions. A finished report with a failed verification is still a
// report (all_passed = false), not an error.
Report run(const ProblemInput& input);

}  // namespace zeta
