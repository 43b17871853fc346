#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primeroots/report.hpp"

namespace primeroots {

inline constexpr int kCheckpointSchemaVersion = 1;

// Resumable frontier of a ranged run: the task identity, the inclusive range,
// how far verification has gotten, all scalar tallies, and the retained
// mismatch rows (without them a resumed run could not reproduce the report
// byte for byte).
struct Checkpoint {
    int schema_version = kCheckpointSchemaVersion;
    std::string task;
    ordered_json params = ordered_json::object();
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t verified_up_to = 0; // inclusive
    std::map<std::string, std::uint64_t> counters;
    std::optional<std::uint64_t> first_mismatch;
    std::vector<ordered_json> records;
};

// Atomic save: write a temporary file next to `path`, then rename over it.
// Throws io_error on failure.
void checkpoint_save(const Checkpoint& cp, const std::string& path);

// Load and validate. Throws io_error (unreadable), corrupt_checkpoint
// (not the expected single JSON object, or invariants violated), or
// unsupported_version.
Checkpoint checkpoint_load(const std::string& path);

} // namespace primeroots
