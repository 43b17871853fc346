#include "primeroots.h"

#include <cstring>
#include <new>
#include <string>

#include "primeroots/audit.hpp"
#include "primeroots/census.hpp"
#include "primeroots/errors.hpp"
#include "primeroots/partitions.hpp"
#include "primeroots/report.hpp"
#include "primeroots/roots.hpp"
#include "primeroots/sieve.hpp"
#include "primeroots/tasks.hpp"

using namespace primeroots;

namespace {

thread_local std::string t_last_error;

pr_status status_of(errc code) {
    switch (code) {
    case errc::invalid_argument: return PR_ERR_INVALID_ARGUMENT;
    case errc::range_too_large: return PR_ERR_RANGE_TOO_LARGE;
    case errc::degenerate_alpha: return PR_ERR_DEGENERATE_ALPHA;
    case errc::invalid_j: return PR_ERR_INVALID_J;
    case errc::io_error: return PR_ERR_IO;
    case errc::corrupt_checkpoint: return PR_ERR_CORRUPT_CHECKPOINT;
    case errc::checkpoint_mismatch: return PR_ERR_CHECKPOINT_MISMATCH;
    case errc::unsupported_version: return PR_ERR_UNSUPPORTED_VERSION;
    }
    return PR_ERR_INTERNAL;
}

// Runs the body and converts whatever escapes into a status code.
template <class Fn>
pr_status trap(Fn&& fn) {
    try {
        t_last_error.clear();
        fn();
        return PR_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return PR_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PR_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return PR_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

struct pr_segment {
    PrimeSegment seg;
};
struct pr_u64_list {
    std::vector<std::uint64_t> values;
};
struct pr_pair_list {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> values;
};
struct pr_report {
    Report report;
};

extern "C" {

const char* pr_status_str(pr_status status) {
    switch (status) {
    case PR_OK: return "ok";
    case PR_PARTIAL: return "partial";
    case PR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PR_ERR_RANGE_TOO_LARGE: return "range too large";
    case PR_ERR_DEGENERATE_ALPHA: return "degenerate alpha";
    case PR_ERR_INVALID_J: return "invalid j";
    case PR_ERR_IO: return "I/O error";
    case PR_ERR_CORRUPT_CHECKPOINT: return "corrupt checkpoint";
    case PR_ERR_CHECKPOINT_MISMATCH: return "checkpoint mismatch";
    case PR_ERR_UNSUPPORTED_VERSION: return "unsupported checkpoint version";
    case PR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pr_last_error(void) { return t_last_error.c_str(); }

void pr_string_free(char* s) { delete[] s; }

pr_status pr_sieve_range(uint64_t lo, uint64_t hi, pr_segment** out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = new pr_segment{sieve_range(lo, hi)}; });
}

void pr_segment_free(pr_segment* seg) { delete seg; }
uint64_t pr_segment_lo(const pr_segment* seg) { return seg->seg.lo(); }
uint64_t pr_segment_hi(const pr_segment* seg) { return seg->seg.hi(); }

int pr_segment_is_prime(const pr_segment* seg, uint64_t n) {
    if (!seg->seg.contains(n)) return -1;
    return seg->seg.is_prime(n) ? 1 : 0;
}

uint64_t pr_segment_count(const pr_segment* seg) { return seg->seg.count(); }

pr_status pr_is_prime(uint64_t n, int* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = is_prime(n) ? 1 : 0; });
}

pr_status pr_primes_in(uint64_t lo, uint64_t hi, pr_u64_list** out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = new pr_u64_list{primes_in(lo, hi)}; });
}

size_t pr_u64_list_size(const pr_u64_list* list) { return list->values.size(); }
uint64_t pr_u64_list_get(const pr_u64_list* list, size_t i) { return list->values.at(i); }
void pr_u64_list_free(pr_u64_list* list) { delete list; }

pr_status pr_goldbach_pairs(uint64_t n, pr_pair_list** out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        auto reps = goldbach_pairs(n);
        auto list = std::make_unique<pr_pair_list>();
        list->values.reserve(reps.size());
        for (const auto& rep : reps) list->values.emplace_back(rep.parts[0], rep.parts[1]);
        *out = list.release();
    });
}

size_t pr_pair_list_size(const pr_pair_list* list) { return list->values.size(); }

void pr_pair_list_get(const pr_pair_list* list, size_t i, uint64_t* p, uint64_t* q) {
    const auto& pair = list->values.at(i);
    if (p) *p = pair.first;
    if (q) *q = pair.second;
}

void pr_pair_list_free(pr_pair_list* list) { delete list; }

pr_status pr_r2(uint64_t n, uint64_t* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = r2(n); });
}

pr_status pr_r3(uint64_t n, uint64_t* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = r3(n); });
}

pr_status pr_representable_k(uint64_t n, uint64_t k, int* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = representable_k(n, k) ? 1 : 0; });
}

pr_status pr_min_k(uint64_t n, uint64_t* out, int* found) {
    if (!out || !found) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        auto k = min_k(n);
        *found = k.has_value() ? 1 : 0;
        if (k) *out = *k;
    });
}

pr_status pr_twin_pairs(uint64_t limit, pr_pair_list** out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        auto pairs = twin_pairs(limit);
        auto list = std::make_unique<pr_pair_list>();
        list->values.reserve(pairs.size());
        for (const auto& tp : pairs) list->values.emplace_back(tp.p, tp.q);
        *out = list.release();
    });
}

pr_status pr_pi2(uint64_t x, uint64_t* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = pi2(x); });
}

pr_status pr_landau_primes(uint64_t n_max, pr_u64_list** out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = new pr_u64_list{landau_primes(n_max)}; });
}

pr_status pr_predicted_alpha(int64_t beta, pr_predicted_count* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        PredictedCount pc = predicted_alpha(beta);
        out->beta = pc.beta;
        out->alpha = pc.alpha;
        out->magnitude = pc.magnitude;
        out->degenerate = pc.degenerate ? 1 : 0;
    });
}

pr_status pr_unit_value(uint64_t target, uint64_t reference, uint64_t j,
                        double* re, double* im) {
    if (!re || !im) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        UnitCircleValue v = unit_value(target, reference, j);
        *re = v.re;
        *im = v.im;
    });
}

pr_status pr_unit_values(int64_t alpha, double* re, double* im, size_t cap, size_t* count) {
    if (!re || !im || !count) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        auto values = unit_values(alpha);
        if (values.size() > cap)
            fail(errc::invalid_argument, "pr_unit_values: capacity too small");
        for (std::size_t i = 0; i < values.size(); i++) {
            re[i] = values[i].re;
            im[i] = values[i].im;
        }
        *count = values.size();
    });
}

pr_status pr_predicted_count_for(uint64_t target, uint64_t reference, uint64_t* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = predicted_count(target, reference); });
}

pr_status pr_induction_step_holds(uint64_t m, uint64_t reference, uint64_t j, int* out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = induction_step_holds(m, reference, j) ? 1 : 0; });
}

void pr_run_options_init(pr_run_options* opts) {
    if (!opts) return;
    std::memset(opts, 0, sizeof(*opts));
}

pr_status pr_run_task(pr_task task, const pr_run_options* opts, pr_report** out) {
    if (!opts || !out) return PR_ERR_INVALID_ARGUMENT;
    *out = nullptr;

    RunControl control;
    control.jobs = opts->jobs;
    if (opts->checkpoint_path) control.checkpoint_path = opts->checkpoint_path;
    if (opts->checkpoint_every) control.checkpoint_every = opts->checkpoint_every;
    control.stop_after = opts->stop_after;
    std::uint64_t max_records = opts->max_records ? opts->max_records : 1000;

    bool partial = false;
    pr_status status = trap([&] {
        Report report;
        if (task == PR_TASK_AUDIT) {
            AuditOptions audit_opts;
            audit_opts.lo = opts->lo;
            audit_opts.hi = opts->hi;
            if (opts->has_beta_override) audit_opts.beta_override = opts->beta_override;
            if (opts->has_small_case_cutoff)
                audit_opts.small_case_cutoff = opts->small_case_cutoff;
            audit_opts.max_records = max_records;
            audit_opts.run = control;
            Claim claim;
            switch (opts->claim) {
            case PR_CLAIM_GOLDBACH: claim = Claim::goldbach; break;
            case PR_CLAIM_THREE_PRIMES: claim = Claim::three_primes; break;
            case PR_CLAIM_TWIN: claim = Claim::twin; break;
            case PR_CLAIM_PROP_C: claim = Claim::prop_c; break;
            case PR_CLAIM_LANDAU: claim = Claim::landau; break;
            default: fail(errc::invalid_argument, "unknown claim");
            }
            AuditResult result = audit_run(claim, audit_opts);
            partial = result.outcome == RunOutcome::partial;
            report = std::move(result.report);
        } else {
            CensusOptions census_opts;
            census_opts.lo = opts->lo;
            census_opts.hi = opts->hi;
            census_opts.max_records = max_records;
            census_opts.run = control;
            CensusTask census_task;
            switch (task) {
            case PR_TASK_SIEVE: census_task = CensusTask::sieve; break;
            case PR_TASK_GOLDBACH: census_task = CensusTask::goldbach; break;
            case PR_TASK_TWINS: census_task = CensusTask::twins; break;
            case PR_TASK_LANDAU: census_task = CensusTask::landau; break;
            case PR_TASK_PROPC: census_task = CensusTask::propc; break;
            default: fail(errc::invalid_argument, "unknown task");
            }
            CensusResult result = census_run(census_task, census_opts);
            partial = result.outcome == RunOutcome::partial;
            report = std::move(result.report);
        }
        if (!partial) *out = new pr_report{std::move(report)};
    });
    if (status != PR_OK) return status;
    return partial ? PR_PARTIAL : PR_OK;
}

pr_status pr_predict(int64_t beta, pr_report** out) {
    if (!out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] { *out = new pr_report{predict_report(beta)}; });
}

void pr_report_free(pr_report* report) { delete report; }

uint64_t pr_report_examined(const pr_report* report) { return report->report.examined; }
uint64_t pr_report_mismatches(const pr_report* report) { return report->report.mismatches; }

int pr_report_first_mismatch(const pr_report* report, uint64_t* out) {
    if (!report->report.first_mismatch) return 0;
    if (out) *out = *report->report.first_mismatch;
    return 1;
}

uint64_t pr_report_counter(const pr_report* report, const char* name) {
    auto it = report->report.counters.find(name ? name : "");
    return it == report->report.counters.end() ? 0 : it->second;
}

int pr_report_exit_code(const pr_report* report) { return report->report.exit_code(); }

pr_status pr_report_render(const pr_report* report, pr_format format, char** out) {
    if (!report || !out) return PR_ERR_INVALID_ARGUMENT;
    return trap([&] {
        *out = dup_string(format == PR_FORMAT_CSV ? report->report.to_csv()
                                                  : report->report.to_json());
    });
}

} // extern "C"
