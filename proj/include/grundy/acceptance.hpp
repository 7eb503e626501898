#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace grundy {

struct AcceptanceOptions {
    /// Base seed for every random corpus in the suite.
    uint64_t seed = 1;
    /// Run the removal-analysis corpora with parallel per-element solves.
    bool parallel = false;
    /// Solver budget override. A tight budget makes solver-backed criteria
    /// fail with an explicit abort message rather than a wrong-value report.
    std::optional<uint64_t> budget;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;

    bool operator==(const CriterionResult&) const = default;
};

struct AcceptanceReport {
    uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    bool operator==(const AcceptanceReport&) const = default;
};

/// Runs the ten acceptance criteria in order. Never throws: a criterion
/// that raises is reported as failed with the exception text as detail.
AcceptanceReport run_acceptance_suite(const AcceptanceOptions& opts = {});

/// One [PASS]/[FAIL] line per criterion plus a summary line.
void print_acceptance_report(std::ostream& out, const AcceptanceReport& report);

}  // namespace grundy
