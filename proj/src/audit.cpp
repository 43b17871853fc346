#include "primeroots/audit.hpp"

#include "primeroots/census.hpp"
#include "primeroots/partitions.hpp"
#include "primeroots/roots.hpp"
#include "primeroots/sieve.hpp"

namespace primeroots {

namespace {

// Largest inclusive bound a bulk primality table is allowed to cover.
constexpr std::uint64_t kBulkTableLimit = std::uint64_t{1} << 33;

constexpr std::uint64_t kLandauMaxN = 4294967294ULL; // n^2 + 1 must fit 64 bits

struct AuditContext {
    Claim claim;
    std::shared_ptr<const PrimalityTable> table;
    std::optional<std::int64_t> beta_override;
    std::uint64_t cutoff = 0;
};

ordered_json audit_row(const char* claim, std::uint64_t m, std::int64_t beta,
                       std::uint64_t magnitude, ordered_json oracle, bool match) {
    ordered_json row;
    row["claim"] = claim;
    row["M"] = m;
    row["beta"] = beta;
    row["predicted_magnitude"] = magnitude;
    row["oracle_value"] = std::move(oracle);
    row["match"] = match;
    return row;
}

void tally(ChunkStats& stats, const AuditContext& ctx, ordered_json row, std::uint64_t m,
           bool match, bool strict) {
    stats.counters["examined"]++;
    if (!strict) stats.counters["strict_mismatches"]++;
    if (match) return;
    if (m < ctx.cutoff) {
        stats.counters["small_case_mismatches"]++;
        return;
    }
    stats.counters["mismatches"]++;
    stats.rows.push_back(std::move(row));
    if (!stats.first_mismatch) stats.first_mismatch = m;
}

// Count oracles are capped just past the prediction: exact whenever they
// matter for the match and the strict comparison.
void audit_count_claim(ChunkStats& stats, const AuditContext& ctx, const char* name,
                       std::uint64_t m, std::uint64_t expected_magnitude,
                       std::uint64_t (*counter)(std::uint64_t, std::uint64_t,
                                                const PrimalityTable&)) {
    std::int64_t beta =
        ctx.beta_override ? *ctx.beta_override : static_cast<std::int64_t>(3 - expected_magnitude);
    PredictedCount pc = predicted_alpha(beta);
    std::uint64_t cap = pc.magnitude + 1;
    std::uint64_t count = counter(m, cap == 0 ? 1 : cap, *ctx.table);
    bool match = !pc.degenerate && pc.magnitude == expected_magnitude && count > 0;
    bool strict = !pc.degenerate && count == pc.magnitude;
    tally(stats, ctx, audit_row(name, m, beta, pc.magnitude, count, match), m, match, strict);
}

ChunkStats audit_chunk(const AuditContext& ctx, std::uint64_t clo, std::uint64_t chi) {
    ChunkStats stats;
    // Fixed counter schema, independent of what the chunk contains.
    stats.counters["examined"] = 0;
    stats.counters["mismatches"] = 0;
    stats.counters["small_case_mismatches"] = 0;
    stats.counters["strict_mismatches"] = 0;
    switch (ctx.claim) {
    case Claim::goldbach:
        for (std::uint64_t m = clo + (clo % 2); m <= chi && m >= clo; m += 2)
            audit_count_claim(stats, ctx, "goldbach", m, 2, &r2_capped);
        break;
    case Claim::three_primes:
        for (std::uint64_t m = clo | 1; m <= chi && m >= clo; m += 2)
            audit_count_claim(stats, ctx, "three_primes", m, 3, &r3_capped);
        break;
    case Claim::twin:
        // Stage 1 sieves N+2, stage 2 sieves the successor of the claimed
        // survivor; each record sits at the integer the +2 step starts from,
        // so both stages check primality of M+2.
        for (std::uint64_t n = clo | 1; n <= chi && n >= clo; n += 2) {
            for (int stage = 1; stage <= 2; stage++) {
                std::uint64_t m = stage == 1 ? n : n + 2;
                std::int64_t beta = stage == 1 ? 2 : 4;
                PredictedCount pc = predicted_alpha(beta);
                bool prime = ctx.table->is_prime(m + 2);
                bool match = prime; // magnitude is 1 for both stages
                tally(stats, ctx,
                      audit_row(stage == 1 ? "twin_stage1" : "twin_stage2", m, beta,
                                pc.magnitude, prime, match),
                      m, match, match);
            }
        }
        break;
    case Claim::prop_c:
        for (std::uint64_t m = clo; m <= chi && m >= clo; m++) {
            std::int64_t beta = ctx.beta_override ? *ctx.beta_override : (m % 2 == 0 ? -1 : 0);
            PredictedCount pc = predicted_alpha(beta);
            bool ok = !pc.degenerate && pc.magnitude >= 1 &&
                      representable_k(m, pc.magnitude, *ctx.table);
            tally(stats, ctx, audit_row("prop_c", m, beta, pc.magnitude, ok, ok), m, ok, ok);
        }
        break;
    case Claim::landau:
        for (std::uint64_t n = clo; n <= chi && n >= clo; n++) {
            std::int64_t beta = ctx.beta_override.value_or(2);
            PredictedCount pc = predicted_alpha(beta);
            std::uint64_t m = n * n + 1;
            bool prime = landau_value_is_prime(n, *ctx.table);
            bool match = !pc.degenerate && pc.magnitude == 1 && prime;
            tally(stats, ctx, audit_row("landau", m, beta, pc.magnitude, prime, match), m,
                  match, match);
        }
        break;
    }
    return stats;
}

void validate_range(Claim claim, std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) fail(errc::invalid_argument, "audit: lo > hi");
    switch (claim) {
    case Claim::goldbach:
        if (lo < 6 || lo % 2 != 0 || hi % 2 != 0)
            fail(errc::invalid_argument, "goldbach audit needs an even range starting at 6");
        break;
    case Claim::three_primes:
        if (lo < 9 || lo % 2 != 1 || hi % 2 != 1)
            fail(errc::invalid_argument, "three_primes audit needs an odd range starting at 9");
        break;
    case Claim::twin:
        if (lo < 9 || lo % 2 != 1 || hi % 2 != 1)
            fail(errc::invalid_argument, "twin audit needs an odd range starting at 9");
        break;
    case Claim::prop_c:
        if (lo < 2) fail(errc::invalid_argument, "prop_c audit needs lo >= 2");
        break;
    case Claim::landau:
        if (lo < 1) fail(errc::invalid_argument, "landau audit needs lo >= 1");
        if (hi > kLandauMaxN) fail(errc::range_too_large, "landau audit: n^2 + 1 exceeds 64 bits");
        break;
    }
}

} // namespace

std::string claim_name(Claim claim) {
    switch (claim) {
    case Claim::goldbach: return "goldbach";
    case Claim::three_primes: return "three_primes";
    case Claim::twin: return "twin";
    case Claim::prop_c: return "prop_c";
    case Claim::landau: return "landau";
    }
    return "unknown";
}

std::optional<Claim> claim_from_name(const std::string& name) {
    if (name == "goldbach") return Claim::goldbach;
    if (name == "three_primes" || name == "three-primes") return Claim::three_primes;
    if (name == "twin" || name == "twins") return Claim::twin;
    if (name == "prop_c" || name == "propc") return Claim::prop_c;
    if (name == "landau") return Claim::landau;
    return std::nullopt;
}

AuditResult audit_run(Claim claim, const AuditOptions& opts) {
    validate_range(claim, opts.lo, opts.hi);
    if (claim == Claim::twin && opts.beta_override)
        fail(errc::invalid_argument, "twin audit has fixed stage offsets 2 and 4");

    AuditContext ctx;
    ctx.claim = claim;
    ctx.beta_override = opts.beta_override;
    ctx.cutoff = opts.small_case_cutoff.value_or(claim == Claim::prop_c ? 12 : 0);

    std::uint64_t table_limit = claim == Claim::twin ? opts.hi + 4 : opts.hi;
    if (table_limit > kBulkTableLimit)
        fail(errc::range_too_large, "audit range exceeds the bulk table budget");
    ctx.table = shared_table(table_limit);

    TaskSignature sig;
    sig.task = "audit";
    sig.lo = opts.lo;
    sig.hi = opts.hi;
    sig.params["claim"] = claim_name(claim);
    sig.params["beta_rule"] =
        opts.beta_override ? "beta=" + std::to_string(*opts.beta_override) : "paper-default";
    sig.params["small_case_cutoff"] = ctx.cutoff;
    sig.params["max_records"] = opts.max_records;

    RunState state;
    RunOutcome outcome =
        run_chunked(sig, opts.run, opts.max_records,
                    [&ctx](std::uint64_t clo, std::uint64_t chi) {
                        return audit_chunk(ctx, clo, chi);
                    },
                    state);

    AuditResult result;
    result.outcome = outcome;
    result.report = assemble_report(
        sig, std::move(state),
        {"claim", "M", "beta", "predicted_magnitude", "oracle_value", "match"},
        outcome == RunOutcome::partial);
    return result;
}

Report audit_goldbach(std::uint64_t lo, std::uint64_t hi, std::optional<std::int64_t> beta) {
    AuditOptions opts;
    opts.lo = lo;
    opts.hi = hi;
    opts.beta_override = beta;
    return audit_run(Claim::goldbach, opts).report;
}

Report audit_three_primes(std::uint64_t lo, std::uint64_t hi, std::optional<std::int64_t> beta) {
    AuditOptions opts;
    opts.lo = lo;
    opts.hi = hi;
    opts.beta_override = beta;
    return audit_run(Claim::three_primes, opts).report;
}

Report audit_twin_claim(std::uint64_t lo, std::uint64_t hi) {
    AuditOptions opts;
    opts.lo = lo;
    opts.hi = hi;
    return audit_run(Claim::twin, opts).report;
}

Report audit_prop_c(std::uint64_t lo, std::uint64_t hi, std::optional<std::int64_t> beta) {
    AuditOptions opts;
    opts.lo = lo;
    opts.hi = hi;
    opts.beta_override = beta;
    return audit_run(Claim::prop_c, opts).report;
}

Report audit_landau(std::uint64_t lo, std::uint64_t hi) {
    AuditOptions opts;
    opts.lo = lo;
    opts.hi = hi;
    return audit_run(Claim::landau, opts).report;
}

} // namespace primeroots
