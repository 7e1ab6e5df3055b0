/* C interface to the shtukacrit library.
 *
 * All functions return SHTK_OK on success.  On failure the return code
 * distinguishes invalid input from internal errors and shtk_last_error()
 * describes the problem (thread-local, valid until the next call on the
 * same thread).  Every char* output is heap-allocated and must be released
 * with shtk_string_free().
 */
#ifndef SHTUKACRIT_H
#define SHTUKACRIT_H

#ifdef __cplusplus
extern "C" {
#endif

#define SHTK_OK 0
#define SHTK_EINVAL 1
#define SHTK_EINTERNAL 2

typedef struct shtk_scenario shtk_scenario;

/* Last error message for the calling thread; never NULL. */
const char* shtk_last_error(void);

void shtk_string_free(char* s);

/* Parses a scenario file (JSON bytes, schema_version 1). */
int shtk_scenario_parse(const char* bytes, shtk_scenario** out);
void shtk_scenario_free(shtk_scenario* s);

/* Full criteria report as canonical JSON. */
int shtk_scenario_report(const shtk_scenario* s, char** json_out);

/* One named check: "validate", "nonempty", "lau", "main_intro",
 * "main_theorem", "quasicompact", "degeneration",
 * "degeneration_all_placements".  Emits a verdict as canonical JSON. */
int shtk_scenario_run(const shtk_scenario* s, const char* check, char** json_out);

/* Admissible set of the dominant coweight lambda (length d): JSON array of
 * {"v":…,"w":…,"length":…,"newton":…} objects. */
int shtk_adm_set(long long d, const long long* lambda, char** json_out);

/* Newton points below lambda: JSON array of slope arrays, dominance-minimal
 * (basic) point flagged. */
int shtk_b_set(long long d, const long long* lambda, char** json_out);

/* Balancing 0/1 representatives for minuscule weights e_1..e_n: JSON array
 * of 0/1 arrays.  deltas[i] counts the ones of the i-th weight. */
int shtk_balance(long long d, const long long* deltas, long long n, char** json_out);

/* Classification + localizations of the space presented by JSON bytes. */
int shtk_isospace_report(const char* bytes, char** json_out);

/* Straightness of a tuple of affine Weyl elements (JSON bytes).
 * *result is 1 or 0. */
int shtk_straight(const char* bytes, int* result);

#ifdef __cplusplus
}
#endif

#endif /* SHTUKACRIT_H */
