// primeroots command-line front end. Parses arguments, drives the library
// through its C API, and writes reports to stdout or --out.
//
// Exit codes: 0 = all checks passed / no mismatch, 1 = counterexample or
// audit mismatch found (report still written), 2 = usage error, 3 = I/O or
// checkpoint error.

#include <cstdio>
#include <cstring>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "primeroots.h"

namespace {

constexpr std::uint64_t kMaxInput = 9223372036854775807ULL; // 2^63 - 1

struct CommandOptions {
    std::string range;
    std::optional<std::uint64_t> max;
    unsigned jobs = 0;
    std::string format = "json";
    std::string out;
    std::string checkpoint;
    std::uint64_t checkpoint_every = 1'000'000;
    std::uint64_t max_records = 1000;
    std::uint64_t stop_after = 0;
    // audit only
    std::string claim;
    std::optional<std::int64_t> beta;
    std::optional<std::uint64_t> small_case_cutoff;
};

void add_common_options(CLI::App* cmd, CommandOptions& opts) {
    cmd->add_option("--range", opts.range, "Inclusive range a..b");
    cmd->add_option("--max", opts.max, "Upper bound (range starts at the task default)")
        ->check(CLI::Range(std::uint64_t{0}, kMaxInput));
    cmd->add_option("--jobs", opts.jobs, "Worker count (default: available parallelism)");
    cmd->add_option("--format", opts.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "Write the report here instead of stdout");
    cmd->add_option("--checkpoint", opts.checkpoint, "Checkpoint file (resumes when present)");
    cmd->add_option("--checkpoint-every", opts.checkpoint_every,
                    "Integers between checkpoint writes")
        ->check(CLI::Range(std::uint64_t{1}, kMaxInput));
    cmd->add_option("--max-records", opts.max_records, "Records kept in the report")
        ->check(CLI::Range(std::uint64_t{1}, kMaxInput));
    cmd->add_option("--stop-after", opts.stop_after,
                    "Stop once this many integers are covered (checkpoint and exit)")
        ->check(CLI::Range(std::uint64_t{0}, kMaxInput));
}

bool parse_u64(const std::string& text, std::uint64_t& out) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return false;
    try {
        out = std::stoull(text);
    } catch (...) {
        return false;
    }
    return out <= kMaxInput;
}

// --range a..b wins over --max; --max fills in the task's default lower bound.
bool resolve_range(const CommandOptions& opts, std::uint64_t default_lo, std::uint64_t& lo,
                   std::uint64_t& hi, std::string& error) {
    if (!opts.range.empty()) {
        auto sep = opts.range.find("..");
        if (sep == std::string::npos || !parse_u64(opts.range.substr(0, sep), lo) ||
            !parse_u64(opts.range.substr(sep + 2), hi)) {
            error = "expected --range a..b with nonnegative integers up to 2^63-1";
            return false;
        }
        return true;
    }
    if (opts.max) {
        lo = default_lo;
        hi = *opts.max;
        return true;
    }
    error = "one of --range or --max is required";
    return false;
}

int write_output(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "primeroots: cannot open %s for writing\n", out_path.c_str());
        return 3;
    }
    bool ok = std::fputs(text, f) >= 0;
    ok = (std::fclose(f) == 0) && ok;
    if (!ok) {
        std::fprintf(stderr, "primeroots: failed writing %s\n", out_path.c_str());
        return 3;
    }
    return 0;
}

int status_exit_code(pr_status status) {
    switch (status) {
    case PR_OK:
    case PR_PARTIAL:
        return 0;
    case PR_ERR_INVALID_ARGUMENT:
    case PR_ERR_RANGE_TOO_LARGE:
    case PR_ERR_DEGENERATE_ALPHA:
    case PR_ERR_INVALID_J:
        return 2;
    default:
        return 3;
    }
}

int report_error(pr_status status) {
    std::fprintf(stderr, "primeroots: %s", pr_status_str(status));
    const char* detail = pr_last_error();
    if (detail && *detail) std::fprintf(stderr, ": %s", detail);
    std::fprintf(stderr, "\n");
    return status_exit_code(status);
}

int emit_report(pr_report* report, const CommandOptions& opts) {
    char* text = nullptr;
    pr_status status = pr_report_render(
        report, opts.format == "csv" ? PR_FORMAT_CSV : PR_FORMAT_JSON, &text);
    if (status != PR_OK) {
        pr_report_free(report);
        return report_error(status);
    }
    int io = write_output(text, opts.out);
    pr_string_free(text);
    int exit_code = io != 0 ? io : pr_report_exit_code(report);
    pr_report_free(report);
    return exit_code;
}

int run_ranged(pr_task task, const CommandOptions& opts, std::uint64_t default_lo) {
    pr_run_options run;
    pr_run_options_init(&run);

    std::string error;
    if (!resolve_range(opts, default_lo, run.lo, run.hi, error)) {
        std::fprintf(stderr, "primeroots: %s\n", error.c_str());
        return 2;
    }
    run.jobs = opts.jobs;
    run.max_records = opts.max_records;
    run.checkpoint_path = opts.checkpoint.empty() ? nullptr : opts.checkpoint.c_str();
    run.checkpoint_every = opts.checkpoint_every;
    run.stop_after = opts.stop_after;

    if (task == PR_TASK_AUDIT) {
        if (opts.claim == "goldbach") run.claim = PR_CLAIM_GOLDBACH;
        else if (opts.claim == "three-primes" || opts.claim == "three_primes")
            run.claim = PR_CLAIM_THREE_PRIMES;
        else if (opts.claim == "twin" || opts.claim == "twins") run.claim = PR_CLAIM_TWIN;
        else if (opts.claim == "propc" || opts.claim == "prop_c") run.claim = PR_CLAIM_PROP_C;
        else if (opts.claim == "landau") run.claim = PR_CLAIM_LANDAU;
        else {
            std::fprintf(stderr, "primeroots: unknown claim '%s'\n", opts.claim.c_str());
            return 2;
        }
        if (opts.beta) {
            run.has_beta_override = 1;
            run.beta_override = *opts.beta;
        }
        if (opts.small_case_cutoff) {
            run.has_small_case_cutoff = 1;
            run.small_case_cutoff = *opts.small_case_cutoff;
        }
    }

    pr_report* report = nullptr;
    pr_status status = pr_run_task(task, &run, &report);
    if (status == PR_PARTIAL) {
        std::fprintf(stderr, "primeroots: stopped early; checkpoint saved%s%s\n",
                     opts.checkpoint.empty() ? "" : " to ",
                     opts.checkpoint.empty() ? "" : opts.checkpoint.c_str());
        return 0;
    }
    if (status != PR_OK) return report_error(status);
    return emit_report(report, opts);
}

std::uint64_t audit_default_lo(const std::string& claim) {
    if (claim == "goldbach") return 6;
    if (claim == "three-primes" || claim == "three_primes") return 9;
    if (claim == "twin" || claim == "twins") return 9;
    if (claim == "landau") return 1;
    return 2; // propc
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Audits roots-of-unity prime-count predictions against sieve oracles"};
    app.require_subcommand(1);

    CommandOptions sieve_opts, goldbach_opts, twins_opts, landau_opts, propc_opts, audit_opts;

    CLI::App* sieve = app.add_subcommand("sieve", "List primes in a range");
    add_common_options(sieve, sieve_opts);

    CLI::App* goldbach =
        app.add_subcommand("goldbach", "Count Goldbach pairs for every even integer in a range");
    add_common_options(goldbach, goldbach_opts);

    CLI::App* twins = app.add_subcommand("twins", "Enumerate twin prime pairs");
    add_common_options(twins, twins_opts);

    CLI::App* landau = app.add_subcommand("landau", "Census of n with n^2 + 1 prime");
    add_common_options(landau, landau_opts);

    CLI::App* propc =
        app.add_subcommand("propc", "Least odd-prime part count for every integer in a range");
    add_common_options(propc, propc_opts);

    CommandOptions predict_opts;
    std::int64_t predict_beta = 0;
    CLI::App* predict =
        app.add_subcommand("predict", "Value set of the offset rule alpha = 3 - beta");
    predict->add_option("--beta", predict_beta, "Offset beta (alpha = 3 - beta)")->required();
    predict->add_option("--format", predict_opts.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    predict->add_option("--out", predict_opts.out, "Write the report here instead of stdout");

    CLI::App* audit = app.add_subcommand("audit", "Audit a claim against its oracle over a range");
    audit->add_option("--claim", audit_opts.claim,
                      "One of goldbach, three-primes, twin, propc, landau")
        ->required();
    audit->add_option("--beta", audit_opts.beta,
                      "Fixed offset beta instead of the claim default");
    audit->add_option("--small-case-cutoff", audit_opts.small_case_cutoff,
                      "Mismatches below this integer go to a separate counter");
    add_common_options(audit, audit_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sieve->parsed()) return run_ranged(PR_TASK_SIEVE, sieve_opts, 0);
    if (goldbach->parsed()) return run_ranged(PR_TASK_GOLDBACH, goldbach_opts, 6);
    if (twins->parsed()) return run_ranged(PR_TASK_TWINS, twins_opts, 0);
    if (landau->parsed()) return run_ranged(PR_TASK_LANDAU, landau_opts, 1);
    if (propc->parsed()) return run_ranged(PR_TASK_PROPC, propc_opts, 2);
    if (audit->parsed())
        return run_ranged(PR_TASK_AUDIT, audit_opts, audit_default_lo(audit_opts.claim));
    if (predict->parsed()) {
        pr_report* report = nullptr;
        pr_status status = pr_predict(predict_beta, &report);
        if (status != PR_OK) return report_error(status);
        return emit_report(report, predict_opts);
    }
    return 2;
}
