#pragma once

#include <string>
#include <vector>

#include "rht/serialize.hpp"

namespace rht {

enum class Level { Ci, Full };

struct AcceptanceOptions {
    Level level = Level::Full;
    unsigned long long seed = 20261015ULL;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    // one clause per sub-check, "ok" or the failing observation
    std::vector<std::string> details;

    std::string line() const;
    Json to_json() const;
};

constexpr int kCriteria = 12;
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

// Recorded outcome of each criterion, used by the golden suite to detect regressions.
bool recorded_outcome(int id);

}  // namespace rht
