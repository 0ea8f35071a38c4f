#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace unialg::cli {

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool checks_passed = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<std::string> notes;

    bool passed() const { return checks_passed && seconds < budget_seconds; }
    /// `criterion 3 PASS  symbolic witness  (0.01 s, budget 1 s)`
    std::string line() const;
};

constexpr int kCriterionCount = 10;

/// Runs the selected criteria (all when `only` is empty) with corpora drawn from `seed`.
std::vector<CriterionOutcome> run_acceptance(std::uint64_t seed, const std::set<int> &only = {});

} // namespace unialg::cli
