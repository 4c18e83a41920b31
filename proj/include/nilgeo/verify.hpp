#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilgeo/catalog.hpp"

namespace nilgeo {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Inconclusive;
    std::optional<std::string> residual;  // exact rational string when meaningful
    std::string detail;
};

struct Report {
    std::string entry;
    ParamAssignment params;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;  // in-memory only; never serialized
};

struct Summary {
    std::size_t entries = 0;
    std::size_t reports = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t inconclusive = 0;
    std::map<std::string, std::array<std::size_t, 3>> per_check;  // pass/fail/inconclusive
};

struct RunResult {
    std::vector<Report> reports;
    Summary summary;
};

/// The fixed check-name list, in execution order; versioned in report headers.
const std::vector<std::string>& check_names();
inline constexpr int kCheckSuiteVersion = 1;

/// Full suite on one instantiated sample of a catalog entry.
Report run_suite_on(const CatalogEntry& e, const ParamAssignment& params);

/// Suite on `samples` seeded samples of one entry.
std::vector<Report> run_suite(const std::string& id, std::size_t samples, std::uint64_t seed);

/// Suite over every catalog entry. Parallelism is capped by NILGEO_THREADS;
/// reports merge in (entry, sample) order regardless.
RunResult run_all(std::size_t samples, std::uint64_t seed);

Summary summarize(const std::vector<Report>& reports, std::size_t entries);

}  // namespace nilgeo
