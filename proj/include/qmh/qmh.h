/* qmh: exact computation of elliptic quasi-modular forms and simple branched
 * cover counts of an elliptic curve.
 *
 * All computation is exact rational arithmetic; results cross the API either
 * as opaque series handles or as JSON text. JSON strings returned through a
 * char** are heap-allocated and must be released with qmh_string_free; series
 * handles must be released with qmh_series_free. Every function returns
 * QMH_OK or an error code, in which case qmh_last_error() describes the
 * failure for the calling thread. */
#ifndef QMH_H
#define QMH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmh_status {
    QMH_OK = 0,
    QMH_ERR_ARGUMENT = 1, /* invalid parameter or malformed input */
    QMH_ERR_BUDGET = 2,   /* brute-force enumeration over budget */
    QMH_ERR_INTERNAL = 3  /* broken internal invariant */
} qmh_status;

/* Truncated q-series with exact rational coefficients on the half-integer
 * exponent grid. JSON form: {"order2": n, "coeffs": [[e, "p/q"], ...]} where
 * entry e stands for q^{e/2}. */
typedef struct qmh_series qmh_series;

const char* qmh_last_error(void);
void qmh_string_free(char* s);
void qmh_series_free(qmh_series* s);

int qmh_series_parse(const char* json, qmh_series** out);
int qmh_series_to_json(const qmh_series* s, char** out);

/* Eisenstein series E_k, k in {2, 4, 6}, to q-order terms. */
int qmh_eisenstein(int k, int terms, qmh_series** out);

/* q d/dq of an integer-grid series. */
int qmh_q_derivative(const qmh_series* s, qmh_series** out);

/* Tests membership in the weight-w graded algebra on E2, E4, E6. The input
 * needs at least dim(w) + 10 q-coefficients. *pass reports whether every
 * coefficient beyond the solve window matched exactly. */
int qmh_recognize(const qmh_series* s, int weight, int* pass, char** report_json);

/* Connected simple branched cover counts of genus g up to max_degree:
 * {"g": g, "rows": [[d, "p/q"], ...]}. Requires g >= 2. */
int qmh_hurwitz_table(int genus, int max_degree, char** json);

/* Cover-count generating function in q and lambda, disconnected by default,
 * connected when the flag is nonzero. */
int qmh_partition_function(int q_order, int lambda_order, int connected, char** json);

/* zeta^0 coefficient of the triple theta product. */
int qmh_theta_zeta0(int q_order, int lambda_order, char** json);

/* Exhaustive monodromy-tuple counts for genus g, degree d covers, with the
 * transitive-image refinement. Fails with QMH_ERR_BUDGET when the tuple
 * space exceeds the budget (0 means the default). */
int qmh_brute_force(int genus, int degree, uint64_t budget, char** json);

/* Runs one verification suite: ramanujan, spectrum, oracle, connected,
 * weights, crosscheck, gm, sl2 or ode. Nonpositive orders and a zero budget
 * select the suite defaults. *pass is 1 when every identity held. */
int qmh_verify(const char* suite, int q_order, int lambda_order, uint64_t budget,
               int* pass, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* QMH_H */
