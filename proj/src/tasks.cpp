#include "primeroots/tasks.hpp"

#include "primeroots/census.hpp"
#include "primeroots/partitions.hpp"
#include "primeroots/roots.hpp"
#include "primeroots/sieve.hpp"

namespace primeroots {

namespace {

constexpr std::uint64_t kBulkTableLimit = std::uint64_t{1} << 33;
constexpr std::uint64_t kLandauMaxN = 4294967294ULL;

struct CensusContext {
    CensusTask task;
    std::shared_ptr<const PrimalityTable> table;
    std::uint64_t range_hi = 0;
};

ChunkStats census_chunk(const CensusContext& ctx, std::uint64_t clo, std::uint64_t chi) {
    ChunkStats stats;
    stats.counters["examined"] = 0;
    stats.counters["mismatches"] = 0;
    switch (ctx.task) {
    case CensusTask::sieve: stats.counters["primes"] = 0; break;
    case CensusTask::goldbach: break;
    case CensusTask::twins: stats.counters["pairs"] = 0; break;
    case CensusTask::landau: stats.counters["witnesses"] = 0; break;
    case CensusTask::propc: stats.counters["no_min_k"] = 0; break;
    }
    const PrimalityTable& table = *ctx.table;
    switch (ctx.task) {
    case CensusTask::sieve:
        for (std::uint64_t n = clo; n <= chi && n >= clo; n++) {
            stats.counters["examined"]++;
            if (table.is_prime(n)) {
                stats.counters["primes"]++;
                stats.rows.push_back(ordered_json{{"p", n}});
            }
        }
        break;
    case CensusTask::goldbach:
        for (std::uint64_t n = clo + (clo % 2); n <= chi && n >= clo; n += 2) {
            stats.counters["examined"]++;
            std::uint64_t pairs = r2_capped(n, ~std::uint64_t{0}, table);
            auto it = stats.mins.find("min_r2");
            if (it == stats.mins.end() || pairs < it->second.first)
                stats.mins["min_r2"] = {pairs, n};
            if (pairs == 0) {
                stats.counters["mismatches"]++;
                stats.rows.push_back(ordered_json{{"n", n}, {"r2", pairs}});
                if (!stats.first_mismatch) stats.first_mismatch = n;
            }
        }
        break;
    case CensusTask::twins:
        for (std::uint64_t p = clo | 1; p <= chi && p >= clo; p += 2) {
            stats.counters["examined"]++;
            if (p < 3 || p + 2 > ctx.range_hi) continue;
            if (table.is_prime(p) && table.is_prime(p + 2)) {
                stats.counters["pairs"]++;
                stats.rows.push_back(ordered_json{{"p", p}, {"q", p + 2}});
            }
        }
        break;
    case CensusTask::landau:
        for (std::uint64_t n = clo; n <= chi && n >= clo; n++) {
            stats.counters["examined"]++;
            if (landau_value_is_prime(n, table)) {
                stats.counters["witnesses"]++;
                stats.rows.push_back(ordered_json{{"n", n}, {"value", n * n + 1}});
            }
        }
        break;
    case CensusTask::propc:
        for (std::uint64_t n = clo; n <= chi && n >= clo; n++) {
            stats.counters["examined"]++;
            auto k = min_k(n, table);
            if (k) {
                auto it = stats.maxs.find("max_min_k");
                if (it == stats.maxs.end() || *k > it->second.first)
                    stats.maxs["max_min_k"] = {*k, n};
                stats.rows.push_back(ordered_json{{"n", n}, {"min_k", *k}});
            } else {
                stats.counters["no_min_k"]++;
                stats.rows.push_back(ordered_json{{"n", n}, {"min_k", nullptr}});
            }
        }
        break;
    }
    return stats;
}

void validate_census(CensusTask task, std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) fail(errc::invalid_argument, "census: lo > hi");
    switch (task) {
    case CensusTask::sieve:
    case CensusTask::twins:
        break;
    case CensusTask::goldbach:
        if (lo < 6) fail(errc::invalid_argument, "goldbach census needs lo >= 6");
        break;
    case CensusTask::landau:
        if (lo < 1) fail(errc::invalid_argument, "landau census needs lo >= 1");
        if (hi > kLandauMaxN) fail(errc::range_too_large, "landau census: n^2 + 1 exceeds 64 bits");
        break;
    case CensusTask::propc:
        if (lo < 2) fail(errc::invalid_argument, "propc census needs lo >= 2");
        break;
    }
}

std::vector<std::string> census_columns(CensusTask task) {
    switch (task) {
    case CensusTask::sieve: return {"p"};
    case CensusTask::goldbach: return {"n", "r2"};
    case CensusTask::twins: return {"p", "q"};
    case CensusTask::landau: return {"n", "value"};
    case CensusTask::propc: return {"n", "min_k"};
    }
    return {};
}

} // namespace

std::string census_task_name(CensusTask task) {
    switch (task) {
    case CensusTask::sieve: return "sieve";
    case CensusTask::goldbach: return "goldbach";
    case CensusTask::twins: return "twins";
    case CensusTask::landau: return "landau";
    case CensusTask::propc: return "propc";
    }
    return "unknown";
}

CensusResult census_run(CensusTask task, const CensusOptions& opts) {
    validate_census(task, opts.lo, opts.hi);
    if (opts.hi > kBulkTableLimit)
        fail(errc::range_too_large, "census range exceeds the bulk table budget");

    CensusContext ctx;
    ctx.task = task;
    ctx.range_hi = opts.hi;
    ctx.table = shared_table(std::max<std::uint64_t>(opts.hi, 4));

    TaskSignature sig;
    sig.task = census_task_name(task);
    sig.lo = opts.lo;
    sig.hi = opts.hi;
    sig.params["max_records"] = opts.max_records;

    RunState state;
    RunOutcome outcome =
        run_chunked(sig, opts.run, opts.max_records,
                    [&ctx](std::uint64_t clo, std::uint64_t chi) {
                        return census_chunk(ctx, clo, chi);
                    },
                    state);

    CensusResult result;
    result.outcome = outcome;
    result.report = assemble_report(sig, std::move(state), census_columns(task),
                                    outcome == RunOutcome::partial);
    return result;
}

Report predict_report(std::int64_t beta) {
    PredictedCount pc = predicted_alpha(beta);

    Report report;
    report.task = "predict";
    report.params["beta"] = pc.beta;
    report.params["alpha"] = pc.alpha;
    report.params["magnitude"] = pc.magnitude;
    report.params["degenerate"] = pc.degenerate;
    report.columns = {"j", "re", "im"};
    if (!pc.degenerate) {
        auto values = unit_values(pc.alpha);
        report.examined = values.size();
        for (std::size_t i = 0; i < values.size(); i++) {
            report.records.push_back(ordered_json{
                {"j", i + 1}, {"re", values[i].re}, {"im", values[i].im}});
        }
    }
    return report;
}

} // namespace primeroots
