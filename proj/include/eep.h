/* C interface to the equivariant Ehrhart library for the permutahedron.
 *
 * Every query produces a JSON report document held behind an opaque
 * handle. Return codes double as CLI exit codes:
 *   0 success, 1 input error, 2 internal invariant violation,
 *   3 check or oracle mismatch.
 */
#ifndef EEP_H
#define EEP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    EEP_OK = 0,
    EEP_ERR_INPUT = 1,
    EEP_ERR_INTERNAL = 2,
    EEP_ERR_MISMATCH = 3
};

typedef struct eep_report eep_report;

/* NUL-terminated JSON text; owned by the report. */
const char* eep_report_json(const eep_report* report);
size_t eep_report_size(const eep_report* report);
void eep_report_free(eep_report* report);

/* Message for the last failing call on this thread; empty if none. */
const char* eep_last_error(void);

/* cycle_type is a comma-separated list of positive cycle lengths,
 * e.g. "2,1,1"; it is canonicalized (sorted decreasing) internally. */
int eep_quasipoly(const char* cycle_type, eep_report** out);
int eep_series(const char* cycle_type, eep_report** out);
int eep_phi(const char* cycle_type, eep_report** out);
int eep_table(int n, eep_report** out);
/* terms <= 0 selects the automatic window. */
int eep_decompose(int n, int terms, eep_report** out);
int eep_verdict(int n, eep_report** out);
/* Budget fields <= 0 select the defaults (t*n <= 40, 1e8 candidates).
 * Returns EEP_ERR_MISMATCH when the brute-force count disagrees with
 * the formula; the report is still produced. */
int eep_oracle(const char* cycle_type, long t, long max_tn,
               long long max_candidates, eep_report** out);
int eep_oracle_sweep(int n_max, long t_max, long max_tn,
                     long long max_candidates, eep_report** out);
/* conjecture is "12.2", "12.3" or "12.4"; max_n is the cycle-type bound
 * for 12.3 and the value of n for 12.2/12.4. Returns EEP_ERR_MISMATCH
 * when the check fails. */
int eep_check(const char* conjecture, int max_n, eep_report** out);

#ifdef __cplusplus
}
#endif

#endif /* EEP_H */
