/* primeroots C API: prime censuses, additive-representation oracles, the
 * unit-circle offset-rule predictor, and range audits of its claims.
 *
 * Every function returns a pr_status; results come back through out
 * parameters. Objects returned as handles are owned by the caller and
 * released with the matching _free function. All calls are thread-safe.
 */
#ifndef PRIMEROOTS_H
#define PRIMEROOTS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pr_status {
    PR_OK = 0,
    PR_PARTIAL = 1, /* run stopped at a checkpoint; not an error */
    PR_ERR_INVALID_ARGUMENT = 2,
    PR_ERR_RANGE_TOO_LARGE = 3,
    PR_ERR_DEGENERATE_ALPHA = 4,
    PR_ERR_INVALID_J = 5,
    PR_ERR_IO = 6,
    PR_ERR_CORRUPT_CHECKPOINT = 7,
    PR_ERR_CHECKPOINT_MISMATCH = 8,
    PR_ERR_UNSUPPORTED_VERSION = 9,
    PR_ERR_INTERNAL = 10
} pr_status;

const char* pr_status_str(pr_status status);

/* Message for the most recent failure on this thread ("" if none). */
const char* pr_last_error(void);

void pr_string_free(char* s);

/* ---- sieve ------------------------------------------------------------ */

typedef struct pr_segment pr_segment; /* primality flags for [lo, hi) */

pr_status pr_sieve_range(uint64_t lo, uint64_t hi, pr_segment** out);
void pr_segment_free(pr_segment* seg);
uint64_t pr_segment_lo(const pr_segment* seg);
uint64_t pr_segment_hi(const pr_segment* seg);
/* 1 = prime, 0 = composite, -1 = n outside [lo, hi). */
int pr_segment_is_prime(const pr_segment* seg, uint64_t n);
uint64_t pr_segment_count(const pr_segment* seg);

pr_status pr_is_prime(uint64_t n, int* out);

typedef struct pr_u64_list pr_u64_list;

pr_status pr_primes_in(uint64_t lo, uint64_t hi, pr_u64_list** out);
size_t pr_u64_list_size(const pr_u64_list* list);
uint64_t pr_u64_list_get(const pr_u64_list* list, size_t i);
void pr_u64_list_free(pr_u64_list* list);

/* ---- partitions -------------------------------------------------------- */

typedef struct pr_pair_list pr_pair_list;

/* Unordered odd-prime pairs {p, q}, p <= q, p + q = n; n even, >= 6. */
pr_status pr_goldbach_pairs(uint64_t n, pr_pair_list** out);
size_t pr_pair_list_size(const pr_pair_list* list);
void pr_pair_list_get(const pr_pair_list* list, size_t i, uint64_t* p, uint64_t* q);
void pr_pair_list_free(pr_pair_list* list);

pr_status pr_r2(uint64_t n, uint64_t* out);
pr_status pr_r3(uint64_t n, uint64_t* out);
pr_status pr_representable_k(uint64_t n, uint64_t k, int* out);
/* *found = 0 when no k <= ceil(n/3) works (then *out is untouched). */
pr_status pr_min_k(uint64_t n, uint64_t* out, int* found);

/* ---- census ------------------------------------------------------------ */

pr_status pr_twin_pairs(uint64_t limit, pr_pair_list** out);
pr_status pr_pi2(uint64_t x, uint64_t* out);
pr_status pr_landau_primes(uint64_t n_max, pr_u64_list** out);

/* ---- offset-rule predictor ---------------------------------------------- */

typedef struct pr_predicted_count {
    int64_t beta;
    int64_t alpha;     /* 3 - beta */
    uint64_t magnitude; /* |alpha| */
    int degenerate;     /* 1 when alpha == 0 */
} pr_predicted_count;

pr_status pr_predicted_alpha(int64_t beta, pr_predicted_count* out);

/* exp(2*pi*i*(j/alpha + (target-3))), alpha = 3 - (target - reference);
 * reference must be odd, 1 <= j <= |alpha|. */
pr_status pr_unit_value(uint64_t target, uint64_t reference, uint64_t j,
                        double* re, double* im);

/* The |alpha| values exp(2*pi*i*j/alpha), j = 1..|alpha|, written to re/im
 * (capacity cap each); *count gets |alpha|. Fails with
 * PR_ERR_INVALID_ARGUMENT when cap is too small. */
pr_status pr_unit_values(int64_t alpha, double* re, double* im, size_t cap, size_t* count);

pr_status pr_predicted_count_for(uint64_t target, uint64_t reference, uint64_t* out);

pr_status pr_induction_step_holds(uint64_t m, uint64_t reference, uint64_t j, int* out);

/* ---- ranged runs ------------------------------------------------------- */

typedef enum pr_task {
    PR_TASK_SIEVE = 0,
    PR_TASK_GOLDBACH = 1,
    PR_TASK_TWINS = 2,
    PR_TASK_LANDAU = 3,
    PR_TASK_PROPC = 4,
    PR_TASK_AUDIT = 5
} pr_task;

typedef enum pr_claim {
    PR_CLAIM_GOLDBACH = 0,
    PR_CLAIM_THREE_PRIMES = 1,
    PR_CLAIM_TWIN = 2,
    PR_CLAIM_PROP_C = 3,
    PR_CLAIM_LANDAU = 4
} pr_claim;

typedef struct pr_run_options {
    uint64_t lo;
    uint64_t hi;              /* inclusive */
    pr_claim claim;           /* PR_TASK_AUDIT only */
    int has_beta_override;
    int64_t beta_override;
    int has_small_case_cutoff;
    uint64_t small_case_cutoff;
    uint64_t max_records;     /* 0 = default 1000 */
    unsigned jobs;            /* 0 = available parallelism */
    const char* checkpoint_path; /* NULL = no checkpointing */
    uint64_t checkpoint_every;   /* 0 = default 1000000 */
    uint64_t stop_after;         /* 0 = run to completion */
} pr_run_options;

void pr_run_options_init(pr_run_options* opts);

typedef struct pr_report pr_report;

/* Runs a ranged task. Returns PR_OK with a finished report, or PR_PARTIAL
 * (stop_after hit; *out stays NULL and the checkpoint holds the frontier). */
pr_status pr_run_task(pr_task task, const pr_run_options* opts, pr_report** out);

/* Value-set prediction for the offset beta (not ranged). */
pr_status pr_predict(int64_t beta, pr_report** out);

void pr_report_free(pr_report* report);
uint64_t pr_report_examined(const pr_report* report);
uint64_t pr_report_mismatches(const pr_report* report);
/* 1 and *out set when a first mismatch exists, else 0. */
int pr_report_first_mismatch(const pr_report* report, uint64_t* out);
uint64_t pr_report_counter(const pr_report* report, const char* name);
/* 0 = all checks passed, 1 = mismatch/counterexample present. */
int pr_report_exit_code(const pr_report* report);

typedef enum pr_format { PR_FORMAT_JSON = 0, PR_FORMAT_CSV = 1 } pr_format;

/* Renders the report; free the string with pr_string_free. */
pr_status pr_report_render(const pr_report* report, pr_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PRIMEROOTS_H */
