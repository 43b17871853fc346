#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "primeroots/runner.hpp"

namespace primeroots {

// The claims under audit. twin expands into two record kinds (stage 1 sieves
// N+2, stage 2 sieves N+4); the others produce one record per integer.
enum class Claim { goldbach, three_primes, twin, prop_c, landau };

std::string claim_name(Claim claim);
std::optional<Claim> claim_from_name(const std::string& name);

struct AuditOptions {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0; // inclusive
    // Offset beta applied to every audited integer instead of the per-claim
    // default (1 for goldbach, 0 for three_primes, parity-dependent 0/-1 for
    // prop_c, 2 for landau). The twin claim has fixed stage offsets 2 and 4
    // and rejects an override.
    std::optional<std::int64_t> beta_override;
    // Mismatches at integers below this go to the small_case_mismatches
    // counter instead of the mismatch list. Default 12 for prop_c, else 0.
    std::optional<std::uint64_t> small_case_cutoff;
    std::uint64_t max_records = 1000;
    RunControl run;
};

struct AuditResult {
    Report report;
    RunOutcome outcome = RunOutcome::complete;
};

AuditResult audit_run(Claim claim, const AuditOptions& opts);

// Range-only conveniences with default options.
Report audit_goldbach(std::uint64_t lo, std::uint64_t hi,
                      std::optional<std::int64_t> beta_override = {});
Report audit_three_primes(std::uint64_t lo, std::uint64_t hi,
                          std::optional<std::int64_t> beta_override = {});
Report audit_twin_claim(std::uint64_t lo, std::uint64_t hi);
Report audit_prop_c(std::uint64_t lo, std::uint64_t hi,
                    std::optional<std::int64_t> beta_override = {});
Report audit_landau(std::uint64_t lo, std::uint64_t hi);

} // namespace primeroots
