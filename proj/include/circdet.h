/* circdet: maximal determinants of binary circulant matrices.
 *
 * C interface to the search engine, bound evaluators, table verifier and
 * conjecture analyses. All functions return a cd_status; result payloads
 * are heap-allocated strings (JSON or plain decimal) that the caller
 * releases with cd_string_free(). On failure, cd_last_error() describes
 * the problem for the calling thread.
 */
#ifndef CIRCDET_H
#define CIRCDET_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cd_status {
    CD_OK = 0,
    CD_EVERIFY = 1,   /* a verification check failed */
    CD_EINVAL = 2,    /* bad argument / usage */
    CD_EINTERNAL = 3  /* internal inconsistency */
} cd_status;

/* Thread-local message for the most recent failure. */
const char* cd_last_error(void);
void cd_string_free(char* s);

/* ---- single-circulant evaluation -------------------------------------- */

/* Opaque handle: order + alphabet + prime-field setup, reusable across
 * many word evaluations. alphabet is "01" or "pm1". */
typedef struct cd_context cd_context;

cd_status cd_context_new(int order, const char* alphabet, cd_context** out);
void cd_context_free(cd_context* ctx);

/* Signed determinant of circ(word(decimal)) as a decimal string. */
cd_status cd_context_eval_word(cd_context* ctx, const char* decimal, char** det_out);
cd_status cd_context_prime(cd_context* ctx, char** decimal_out);

/* ---- search ----------------------------------------------------------- */

typedef struct cd_search_options {
    int order;
    const char* alphabet;          /* "01" | "pm1" */
    int workers;                   /* >= 1 */
    unsigned long long sample_size; /* 0 = default 4000 * workers */
    unsigned long long seed;
    const char* checkpoint_path;   /* NULL = no checkpointing */
    int keep_maximizers;           /* retain all maximizing necklaces */
} cd_search_options;

/* JSON object: n, alphabet, max_abs_det, scaled_det (pm1 only),
 * upper_bound, ratio, lex_least_decimal, lex_least_word, candidates,
 * elapsed_seconds, prime_used, seed, maximizers (optional). */
cd_status cd_search(const cd_search_options* opts, char** json_out);

/* ---- table verification ----------------------------------------------- */

/* JSON array of per-row checks {n, alphabet, pass, mode, detail}.
 * Returns CD_EVERIFY if any row fails. words_only skips full searches. */
cd_status cd_verify(int from, int to, const char* alphabet, int workers,
                    double budget_seconds, int words_only, char** json_out);

/* JSON row {n, alphabet, value, ratio, decimal}, or JSON null if the
 * order is outside the table range. */
cd_status cd_table_lookup(int order, const char* alphabet, char** json_out);

/* ---- bounds ----------------------------------------------------------- */

/* JSON object: n, alphabet, upper_bound, hbe_floor. */
cd_status cd_bounds(int order, const char* alphabet, char** json_out);

/* ---- conjecture reports ----------------------------------------------- */

/* Circulant-core classification and bound-attainment per order.
 * Determinants come from table rows; CD_EINTERNAL on inconsistency. */
cd_status cd_conjecture_a(int from, int to, char** json_out);

/* Perturbation scan over all rotations of all maximizers at the given
 * order (runs a search first; order <= 32). */
cd_status cd_conjecture_b(int order, const char* alphabet, char** json_out);

/* Closed-form analysis of the one-parameter quadratic-residue circulant
 * at prime order = 1 (mod 4): polynomial cross-check, special values,
 * interior local maximum. */
cd_status cd_ura_report(int order, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* CIRCDET_H */
