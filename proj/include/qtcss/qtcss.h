/* C interface to the threshold-changeable secret sharing simulator.
 *
 * All functions return qtcss_status; QTCSS_OK means success and anything
 * else names the failure. qtcss_last_error() gives a human-readable message
 * for the most recent failing call on the current thread. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with qtcss_string_free().
 *
 * Quantum sessions are opaque single-owner objects; shares within a session
 * are addressed by integer handles. Handles are single-use: a consumed
 * handle fails every later operation. There is deliberately no way to
 * export or duplicate a quantum share.
 */
#ifndef QTCSS_H
#define QTCSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QTCSS_API __declspec(dllexport)
#else
#define QTCSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtcss_status {
    QTCSS_OK = 0,
    QTCSS_ERR_ZERO_INVERSE,
    QTCSS_ERR_MODULUS_MISMATCH,
    QTCSS_ERR_DUPLICATE_ABSCISSA,
    QTCSS_ERR_SINGULAR_SYSTEM,
    QTCSS_ERR_BAD_PARAMETERS,
    QTCSS_ERR_DUPLICATE_PARTY,
    QTCSS_ERR_INSUFFICIENT_SHARES,
    QTCSS_ERR_TOO_MANY_QUBITS,
    QTCSS_ERR_INDEX_OUT_OF_RANGE,
    QTCSS_ERR_CONTROL_EQUALS_TARGET,
    QTCSS_ERR_EMPTY_KEEP_SET,
    QTCSS_ERR_DIMENSION_MISMATCH,
    QTCSS_ERR_BAD_PARTY_COUNT,
    QTCSS_ERR_SHARE_CONSUMED,
    QTCSS_ERR_UNKNOWN_HANDLE,
    QTCSS_ERR_INCOMPLETE_QUORUM,
    QTCSS_ERR_NOT_PROPER_SUBSET,
    QTCSS_ERR_INVALID_SCENARIO,
    QTCSS_ERR_BUFFER_TOO_SMALL,
    QTCSS_ERR_BAD_ALLOC,
    QTCSS_ERR_INTERNAL,
} qtcss_status;

QTCSS_API const char* qtcss_status_name(qtcss_status status);
QTCSS_API const char* qtcss_last_error(void);
QTCSS_API void qtcss_string_free(char* s);
QTCSS_API const char* qtcss_version(void);

/* ---------------- classical bivariate-polynomial TCSS ---------------- */

/* Deals `parties` shares of `secret` under a random degree-(dx, dy)
 * polynomial over GF(modulus). *out_shares receives a JSON array of share
 * records {party_id, modulus, f_row, f_col}. */
QTCSS_API qtcss_status qtcss_classical_deal(uint32_t secret, uint32_t modulus, uint32_t parties,
                                            uint32_t dx, uint32_t dy, uint64_t seed,
                                            char** out_shares);

/* Shares of the built-in GF(11) demo polynomial (secret 7). */
QTCSS_API qtcss_status qtcss_classical_example_shares(uint32_t parties, char** out_shares);

/* Low-threshold reconstruction from two share records. */
QTCSS_API qtcss_status qtcss_classical_reconstruct2(const char* share_a, const char* share_b,
                                                    uint32_t* out_secret);

/* Intermediate threshold: takes a JSON array of exactly 3 share records,
 * truncates them and solves with the default evaluation schedule. */
QTCSS_API qtcss_status qtcss_classical_reconstruct3(const char* shares_array,
                                                    uint32_t* out_secret);

/* High threshold: JSON array of at least dy+1 share records. */
QTCSS_API qtcss_status qtcss_classical_reconstruct4(const char* shares_array,
                                                    uint32_t* out_secret);

/* Old-share attack. method: 0 = column-poly-at-zero, 1 = re-truncation.
 * *out_transcript receives {colluders, method, recovered_secret, narrative}. */
QTCSS_API qtcss_status qtcss_classical_attack(const char* share_a, const char* share_b,
                                              uint32_t declared_threshold, int method,
                                              char** out_transcript);

/* ---------------------- quantum sharing sessions --------------------- */

typedef struct qtcss_session qtcss_session;
typedef uint64_t qtcss_handle;

/* Shares the qubit (a_re + i a_im)|0> + (b_re + i b_im)|1> to `parties`
 * parties. Amplitudes must be normalized within 1e-10. */
QTCSS_API qtcss_status qtcss_session_deal(double a_re, double a_im, double b_re, double b_im,
                                          uint32_t parties, qtcss_session** out_session);

QTCSS_API void qtcss_session_free(qtcss_session* session);

/* Current mandatory threshold == number of live handles. */
QTCSS_API qtcss_status qtcss_session_threshold(const qtcss_session* session, uint32_t* out);

/* Writes the live handles (ascending). With NULL `out`, only *out_count is
 * set. Returns QTCSS_ERR_BUFFER_TOO_SMALL when cap is insufficient. */
QTCSS_API qtcss_status qtcss_session_live_handles(const qtcss_session* session, qtcss_handle* out,
                                                  size_t cap, size_t* out_count);

/* Consumes `handle`, raising the threshold by k-1; writes the k fresh
 * handles. Query mode with NULL `out` is NOT supported here because the
 * split mutates the session; cap must be at least k. */
QTCSS_API qtcss_status qtcss_session_split(qtcss_session* session, qtcss_handle handle,
                                           uint32_t k, qtcss_handle* out_new, size_t cap,
                                           size_t* out_count);

/* Requires exactly the full live set; consumes everything and closes the
 * session. The recovered amplitudes are written to the out parameters. */
QTCSS_API qtcss_status qtcss_session_reconstruct(qtcss_session* session,
                                                 const qtcss_handle* handles, size_t count,
                                                 double* out_a_re, double* out_a_im,
                                                 double* out_b_re, double* out_b_im);

/* Non-destructive leakage analysis of a proper nonempty subset of live
 * handles. *out_report receives {subset_size, purity, fidelity, is_mixed,
 * reduced_state?} where reduced_state is row-major "re im" text when the
 * matrix is small enough to materialize. */
QTCSS_API qtcss_status qtcss_session_analyze(const qtcss_session* session,
                                             const qtcss_handle* subset, size_t count,
                                             char** out_report);

/* Event log of the session as a JSON array of {op, detail}. */
QTCSS_API qtcss_status qtcss_session_transcript(const qtcss_session* session, char** out_json);

/* --------------------------- scenario runner ------------------------- */

typedef enum qtcss_format {
    QTCSS_FORMAT_TEXT = 0,
    QTCSS_FORMAT_STRUCTURED = 1,
} qtcss_format;

/* Runs a scenario document {kind, seed, params} and renders its report.
 * *out_all_passed (optional) is set to 1 when every verdict passed.
 * Identical (document, format) inputs produce identical bytes. */
QTCSS_API qtcss_status qtcss_scenario_run(const char* scenario_json, qtcss_format format,
                                          char** out_report, int* out_all_passed);

#ifdef __cplusplus
}
#endif

#endif /* QTCSS_H */
