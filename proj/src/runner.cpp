#include "primeroots/runner.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "primeroots/checkpoint.hpp"
#include "primeroots/errors.hpp"

namespace primeroots {

namespace {

void fold(RunState& state, ChunkStats&& chunk, std::uint64_t max_records) {
    for (const auto& [name, value] : chunk.counters) state.counters[name] += value;
    for (const auto& [name, pair] : chunk.mins) {
        auto it = state.mins.find(name);
        if (it == state.mins.end() || pair.first < it->second.first)
            state.mins[name] = pair;
    }
    for (const auto& [name, pair] : chunk.maxs) {
        auto it = state.maxs.find(name);
        if (it == state.maxs.end() || pair.first > it->second.first)
            state.maxs[name] = pair;
    }
    for (auto& row : chunk.rows) {
        if (state.rows.size() < max_records)
            state.rows.push_back(std::move(row));
        else
            state.records_elided++;
    }
    if (!state.first_mismatch) state.first_mismatch = chunk.first_mismatch;
}

Checkpoint to_checkpoint(const TaskSignature& sig, const RunState& state) {
    Checkpoint cp;
    cp.task = sig.task;
    cp.params = sig.params;
    cp.lo = sig.lo;
    cp.hi = sig.hi;
    cp.verified_up_to = state.verified_up_to;
    cp.counters = state.counters;
    cp.counters["records_elided"] = state.records_elided;
    for (const auto& [name, pair] : state.mins) {
        cp.counters[name] = pair.first;
        cp.counters[name + "_at"] = pair.second;
    }
    for (const auto& [name, pair] : state.maxs) {
        cp.counters[name] = pair.first;
        cp.counters[name + "_at"] = pair.second;
    }
    cp.first_mismatch = state.first_mismatch;
    cp.records = state.rows;
    return cp;
}

void seed_from_checkpoint(const TaskSignature& sig, const Checkpoint& cp, RunState& state) {
    if (cp.task != sig.task || cp.lo != sig.lo || cp.hi != sig.hi || cp.params != sig.params)
        fail(errc::checkpoint_mismatch,
             "checkpoint was written by a different task, range, or parameter set");
    state.counters = cp.counters;
    auto pull = [&](std::map<std::string, std::pair<std::uint64_t, std::uint64_t>>& dst,
                    const std::string& name) {
        auto v = state.counters.find(name);
        auto at = state.counters.find(name + "_at");
        if (v != state.counters.end() && at != state.counters.end()) {
            dst[name] = {v->second, at->second};
            state.counters.erase(v);
            state.counters.erase(name + "_at");
        }
    };
    // Extremum tallies round-trip through the counters object by convention.
    pull(state.mins, "min_r2");
    pull(state.maxs, "max_min_k");
    auto elided = state.counters.find("records_elided");
    if (elided != state.counters.end()) {
        state.records_elided = elided->second;
        state.counters.erase(elided);
    }
    state.first_mismatch = cp.first_mismatch;
    state.rows = cp.records;
    state.verified_up_to = cp.verified_up_to;
    state.resumed = true;
}

struct Progress {
    const TaskSignature& sig;
    std::uint64_t interval;
    std::uint64_t next_mark;

    void maybe_print(std::uint64_t frontier, std::uint64_t hi) {
        if (frontier < next_mark && frontier != hi) return;
        if (frontier != hi) next_mark = frontier + interval;
        std::fprintf(stderr, "%s: verified up to %llu of %llu\n", sig.task.c_str(),
                     static_cast<unsigned long long>(frontier),
                     static_cast<unsigned long long>(hi));
    }
};

} // namespace

RunOutcome run_chunked(const TaskSignature& sig, const RunControl& control,
                       std::uint64_t max_records, const ChunkFn& fn, RunState& state) {
    if (sig.lo > sig.hi) fail(errc::invalid_argument, "run: lo > hi");
    const std::uint64_t chunk_size = std::max<std::uint64_t>(1, control.chunk_size);
    const std::uint64_t every = std::max<std::uint64_t>(1, control.checkpoint_every);
    const bool checkpointing = !control.checkpoint_path.empty();

    if (checkpointing && std::filesystem::exists(control.checkpoint_path))
        seed_from_checkpoint(sig, checkpoint_load(control.checkpoint_path), state);

    std::uint64_t start = state.resumed ? state.verified_up_to + 1 : sig.lo;
    Progress progress{sig, every, start + every - 1};

    auto covered = [&](std::uint64_t frontier) { return frontier - sig.lo + 1; };
    std::uint64_t last_saved = state.resumed ? covered(state.verified_up_to) : 0;

    auto save = [&] {
        if (checkpointing) checkpoint_save(to_checkpoint(sig, state), control.checkpoint_path);
    };
    auto after_chunk = [&](std::uint64_t chunk_hi) -> bool {
        state.verified_up_to = chunk_hi;
        progress.maybe_print(chunk_hi, sig.hi);
        bool stop = control.stop_after > 0 && covered(chunk_hi) >= control.stop_after &&
                    chunk_hi != sig.hi;
        if (checkpointing && (covered(chunk_hi) - last_saved >= every || stop)) {
            save();
            last_saved = covered(chunk_hi);
        }
        return stop;
    };
    auto finish = [&]() -> RunOutcome {
        state.verified_up_to = sig.hi;
        if (checkpointing) {
            std::error_code ec;
            std::filesystem::remove(control.checkpoint_path, ec);
        }
        return RunOutcome::complete;
    };

    if (state.resumed && state.verified_up_to >= sig.hi) return finish();

    const std::uint64_t total = sig.hi - start + 1;
    const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
    auto chunk_lo = [&](std::uint64_t id) { return start + id * chunk_size; };
    auto chunk_hi = [&](std::uint64_t id) {
        return id == nchunks - 1 ? sig.hi : chunk_lo(id) + chunk_size - 1;
    };

    unsigned jobs = control.jobs ? control.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;

    if (jobs == 1 || nchunks == 1) {
        for (std::uint64_t id = 0; id < nchunks; id++) {
            fold(state, fn(chunk_lo(id), chunk_hi(id)), max_records);
            if (after_chunk(chunk_hi(id))) return RunOutcome::partial;
        }
        return finish();
    }

    // Parallel path: workers claim chunk ids and park results in slots; this
    // thread merges strictly in id order. A bounded window keeps memory flat
    // when one chunk runs long.
    std::mutex m;
    std::condition_variable slot_ready;
    std::condition_variable window_open;
    std::vector<std::unique_ptr<ChunkStats>> slots(nchunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::uint64_t merged = 0;
    bool stopping = false;
    std::exception_ptr error;
    const std::uint64_t window = std::max<std::uint64_t>(16, std::uint64_t{jobs} * 4);

    auto worker = [&] {
        for (;;) {
            std::uint64_t id = next_chunk.fetch_add(1);
            if (id >= nchunks) return;
            {
                std::unique_lock lk(m);
                window_open.wait(lk, [&] { return stopping || error || id < merged + window; });
                if (stopping || error) return;
            }
            try {
                auto result = std::make_unique<ChunkStats>(fn(chunk_lo(id), chunk_hi(id)));
                std::lock_guard lk(m);
                slots[id] = std::move(result);
            } catch (...) {
                std::lock_guard lk(m);
                if (!error) error = std::current_exception();
            }
            slot_ready.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; i++) pool.emplace_back(worker);

    bool stopped_early = false;
    for (std::uint64_t id = 0; id < nchunks; id++) {
        std::unique_ptr<ChunkStats> result;
        {
            std::unique_lock lk(m);
            slot_ready.wait(lk, [&] { return slots[id] != nullptr || error; });
            if (error) break;
            result = std::move(slots[id]);
            merged = id + 1;
        }
        window_open.notify_all();
        fold(state, std::move(*result), max_records);
        if (after_chunk(chunk_hi(id))) {
            stopped_early = true;
            break;
        }
    }

    {
        std::lock_guard lk(m);
        stopping = true;
    }
    window_open.notify_all();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return stopped_early ? RunOutcome::partial : finish();
}

Report assemble_report(const TaskSignature& sig, RunState&& state,
                       std::vector<std::string> columns, bool partial) {
    Report report;
    report.task = sig.task;
    report.range = {sig.lo, sig.hi};
    report.params = sig.params;
    report.counters = std::move(state.counters);

    auto take = [&](const char* name) {
        auto it = report.counters.find(name);
        std::uint64_t v = it == report.counters.end() ? 0 : it->second;
        if (it != report.counters.end()) report.counters.erase(it);
        return v;
    };
    report.examined = take("examined");
    report.mismatches = take("mismatches");
    for (const auto& [name, pair] : state.mins) {
        report.counters[name] = pair.first;
        report.counters[name + "_at"] = pair.second;
    }
    for (const auto& [name, pair] : state.maxs) {
        report.counters[name] = pair.first;
        report.counters[name + "_at"] = pair.second;
    }
    report.first_mismatch = state.first_mismatch;
    report.records = std::move(state.rows);
    report.records_elided = state.records_elided;
    report.columns = std::move(columns);
    report.partial = partial;
    return report;
}

} // namespace primeroots
