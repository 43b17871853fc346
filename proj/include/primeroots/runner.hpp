#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primeroots/report.hpp"

namespace primeroots {

// Execution knobs for ranged runs. Everything here is allowed to change
// results' timing but never their bytes.
struct RunControl {
    unsigned jobs = 0;                          // 0 = available parallelism
    std::uint64_t chunk_size = 1 << 16;         // positions per work unit
    std::uint64_t checkpoint_every = 1'000'000; // positions between saves
    std::string checkpoint_path;                // empty = no checkpointing
    std::uint64_t stop_after = 0;               // stop once this many positions are
                                                // covered (0 = run to completion)
};

// What a chunk contributes. Rows must be emitted in ascending order within
// the chunk, and every contribution must be a pure function of the position
// so that chunk boundaries cannot affect the merged result.
struct ChunkStats {
    std::map<std::string, std::uint64_t> counters;
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> mins; // value, at
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> maxs; // value, at
    std::vector<ordered_json> rows;
    std::optional<std::uint64_t> first_mismatch;
};

struct RunState {
    std::map<std::string, std::uint64_t> counters;
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> mins;
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> maxs;
    std::vector<ordered_json> rows;
    std::uint64_t records_elided = 0;
    std::optional<std::uint64_t> first_mismatch;
    std::uint64_t verified_up_to = 0;
    bool resumed = false;
};

// Identity of a run for checkpoint compatibility: resuming under a different
// task, range, or parameter set is refused.
struct TaskSignature {
    std::string task;
    ordered_json params;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

enum class RunOutcome { complete, partial };

using ChunkFn = std::function<ChunkStats(std::uint64_t lo, std::uint64_t hi)>; // inclusive

// Chunked, order-preserving parallel driver. Workers process disjoint chunks;
// a single merging thread folds results in ascending chunk order, writes
// checkpoints at chunk boundaries, and owns all output state. The merged
// result is identical for any worker count.
RunOutcome run_chunked(const TaskSignature& sig, const RunControl& control,
                       std::uint64_t max_records, const ChunkFn& fn, RunState& state);

// Turn a finished (or stopped) run into the uniform report document.
Report assemble_report(const TaskSignature& sig, RunState&& state,
                       std::vector<std::string> columns, bool partial);

} // namespace primeroots
