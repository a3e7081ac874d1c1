/* C interface to the reciprocity-law library: quadratic characters,
 * Hilbert symbols over Q, p-adic solvability oracles, and cubic/quartic
 * power residue symbols over Z[w] and Z[i].
 *
 * All functions return RECIP_OK on success; on failure the context holds
 * a human-readable message. Rational arguments are decimal literals of
 * the form `n`, `-n`, or `n/d`; quadratic-integer literals are `a`,
 * `a+bi`, `a-bi`, `a+bw`, `a-bw`. Signs are +1/-1 integers; m-th roots
 * of unity are exponents k with 0 <= k < m.
 */
#ifndef RECIP_H
#define RECIP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RECIP_OK = 0,
  RECIP_EDOMAIN = 1,   /* argument outside the operation's domain */
  RECIP_EPARSE = 2,    /* malformed literal */
  RECIP_EINTERNAL = 3, /* internal invariant violated */
} recip_status;

/* Opaque evaluation context; owns the last error message. Contexts are
 * independent and may be used concurrently from different threads. */
typedef struct recip_ctx recip_ctx;

recip_ctx* recip_ctx_new(void);
void recip_ctx_free(recip_ctx* ctx);
const char* recip_last_error(const recip_ctx* ctx);

/* Strings returned through char** out-parameters are heap-allocated and
 * must be released with recip_string_free. */
void recip_string_free(char* s);

/* Legendre character of a at the odd prime p (Euler criterion). */
recip_status recip_legendre(recip_ctx* ctx, const char* a, const char* p,
                            int* out_sign);
/* Same value recomputed through the reciprocity descent. */
recip_status recip_legendre_reciprocity(recip_ctx* ctx, const char* a,
                                        const char* p, int* out_sign);
/* which = 4, 8, or 48 for lambda_4, lambda_8, lambda_4*lambda_8. */
recip_status recip_character(recip_ctx* ctx, int which, const char* a,
                             int* out_sign);

/* Hilbert symbol (a,b)_v; place is "inf" or a prime literal. */
recip_status recip_hilbert(recip_ctx* ctx, const char* a, const char* b,
                           const char* place, int* out_sign);

/* Per-place symbol table over the support of (a,b). Entry strings are
 * owned by the report and valid until recip_report_free. */
typedef struct recip_report recip_report;

recip_status recip_product_check(recip_ctx* ctx, const char* a, const char* b,
                                 recip_report** out);
int recip_report_size(const recip_report* report);
recip_status recip_report_entry(const recip_report* report, int index,
                                const char** out_place, int* out_sign,
                                const char** out_t_value /* NULL at inf */);
int recip_report_product(const recip_report* report);
void recip_report_free(recip_report* report);

/* Rousseau group-product computation for distinct odd primes. */
recip_status recip_rousseau(recip_ctx* ctx, const char* p, const char* q,
                            int* out_lhs, int* out_rhs);

/* p-adic square root of x to `precision` significant digits; *out is a
 * textual approximation "p^v * m + O(p^e)". */
recip_status recip_padic_sqrt(recip_ctx* ctx, const char* x, const char* p,
                              int precision, char** out);
recip_status recip_is_square(recip_ctx* ctx, const char* x, const char* p,
                             int* out);

/* Certified solvability of a x^2 + b y^2 = 1 in Q_p. On success
 * *out_solvable is 0 or 1; when solvable and out_witness is non-NULL it
 * receives "x = ..., y = ...". */
recip_status recip_oracle(recip_ctx* ctx, const char* a, const char* b,
                          const char* p, int* out_solvable,
                          char** out_witness);
/* Whether a is a norm from Q_p(sqrt(b)). */
recip_status recip_norm_test(recip_ctx* ctx, const char* a, const char* b,
                             const char* p, int* out_is_norm);

/* m-th power residue symbol (m = 3 over Z[w], m = 4 over Z[i]); the
 * result is the exponent k of the root of unity. */
recip_status recip_residue_symbol(recip_ctx* ctx, int m, const char* modulus,
                                  const char* arg, int* out_exponent);
/* Empirical reciprocity for primary primes; exponents of both sides. */
recip_status recip_reciprocity_check(recip_ctx* ctx, int m, const char* pi,
                                     const char* theta, int* out_lhs,
                                     int* out_rhs);

/* Runs a named verification suite (qr, product, oracle, rousseau, cubic,
 * quartic, hensel, characters). bound <= 0 selects the default sweep.
 * *out_passed is 1 iff every assertion held; when a failure exists and
 * out_first_failure is non-NULL it receives a description of one. */
recip_status recip_verify(recip_ctx* ctx, const char* suite, long bound,
                          int* out_passed, long* out_cases,
                          char** out_first_failure);

#ifdef __cplusplus
}
#endif

#endif /* RECIP_H */
