#pragma once

#include <cstdint>
#include <string>

#include "primeroots/runner.hpp"

namespace primeroots {

// Ranged enumeration/verification tasks behind the plain subcommands.
enum class CensusTask { sieve, goldbach, twins, landau, propc };

std::string census_task_name(CensusTask task);

struct CensusOptions {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0; // inclusive
    std::uint64_t max_records = 1000;
    RunControl run;
};

struct CensusResult {
    Report report;
    RunOutcome outcome = RunOutcome::complete;
};

CensusResult census_run(CensusTask task, const CensusOptions& opts);

// Offset-rule prediction: the value set for alpha = 3 - beta.
Report predict_report(std::int64_t beta);

} // namespace primeroots
