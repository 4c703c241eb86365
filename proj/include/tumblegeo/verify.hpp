#pragma once

// A battery of named self-checks over the whole library.

#include "tumblegeo/edge_markov.hpp"

#include <string>
#include <vector>

namespace tumblegeo {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every check. The product drives the edge-label system; pass
/// left_product to watch the table checks fail.
std::vector<Check> run_verification(const Product& product = right_product);

bool all_passed(const std::vector<Check>& checks);

/// {"passed": bool, "checks": [{"name", "passed", "detail"}, ...]}
std::string verification_json(const std::vector<Check>& checks);

}  // namespace tumblegeo
