/*
 * redei: permutation polynomials of F_{q^2} (q = 2^t, t odd) built from the
 * even-characteristic Redei function, with exhaustive verification helpers.
 *
 * C interface to the shared library.  All state lives behind opaque handles;
 * every function that can fail returns an rf_status, with a human-readable
 * detail retrievable from rf_last_error() on the failing thread.  Handles are
 * immutable after creation and safe to share across threads.
 */
#ifndef REDEI_H
#define REDEI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
  RF_OK = 0,
  RF_ERR_ARGUMENT = 1,  /* bad argument, null pointer, malformed input */
  RF_ERR_DEGREE = 2,    /* t even or outside [3, 31] */
  RF_ERR_MODULUS = 3,   /* supplied modulus reducible or of wrong degree */
  RF_ERR_DIV_ZERO = 4,  /* inverse of zero */
  RF_ERR_POLE = 5,      /* rational map evaluated at a pole */
  RF_ERR_NOT_ON_MU = 6, /* point not on the unit circle mu_{q+1} */
  RF_ERR_BUFFER = 7,    /* caller buffer too small */
  RF_ERR_IO = 8,        /* file missing or unparsable */
  RF_ERR_NOMEM = 9
} rf_status;

/* Field context: F_q with q = 2^t, t odd, plus the tower F_{q^2} = F_q(b)
 * where b^2 = b + 1. */
typedef struct rf_ctx rf_ctx;

/* Sparse polynomial over F_{q^2} produced by rf_build; all coefficients of
 * built polynomials equal 1, so only the (descending) exponents are exposed. */
typedef struct rf_poly rf_poly;

/* Tower element c0 + c1*b; c0, c1 are t-bit polynomial residues. */
typedef struct rf_fq2 {
  uint64_t c0;
  uint64_t c1;
} rf_fq2;

const char* rf_version(void);
const char* rf_strerror(rf_status status);
/* Detail message of the most recent failure on this thread ("" if none). */
const char* rf_last_error(void);

/* modulus_bits: big-endian 0/1 string such as "1011" for x^3+x+1, or NULL to
 * select the lexicographically least irreducible polynomial of degree t. */
rf_status rf_ctx_new(unsigned t, const char* modulus_bits, rf_ctx** out);
void rf_ctx_free(rf_ctx* ctx);

unsigned rf_ctx_t(const rf_ctx* ctx);
uint64_t rf_ctx_q(const rf_ctx* ctx);
uint64_t rf_ctx_q2(const rf_ctx* ctx);
uint64_t rf_ctx_mu_order(const rf_ctx* ctx);
rf_status rf_ctx_modulus(const rf_ctx* ctx, char* buf, size_t len);

/* Tower arithmetic.  Exponents are plain uint64 (every exponent of interest
 * is below q^2, and q^2 - 1 < 2^62). */
rf_status rf_fq2_add(const rf_ctx* ctx, rf_fq2 a, rf_fq2 b, rf_fq2* out);
rf_status rf_fq2_mul(const rf_ctx* ctx, rf_fq2 a, rf_fq2 b, rf_fq2* out);
rf_status rf_fq2_inv(const rf_ctx* ctx, rf_fq2 a, rf_fq2* out);
rf_status rf_fq2_pow(const rf_ctx* ctx, rf_fq2 a, uint64_t e, rf_fq2* out);
rf_status rf_frobenius(const rf_ctx* ctx, rf_fq2 a, rf_fq2* out);
/* Formats "c0+c1*b" with hex parts, e.g. "3+5*b". */
rf_status rf_fq2_format(const rf_ctx* ctx, rf_fq2 a, char* buf, size_t len);

/* Permutation criterion for x^{n+m(q+1)} M_n(x^{q-1}) (family
 * 'M') or the N_n analogue (family 'N'): gcd(n+m(q+1), q-1) = 1 and
 * gcd(n, q^2-1) = 1, plus n = 1 (mod 3) for family N.  On exclusion,
 * *permutes is 0 and reason receives the failing condition. */
rf_status rf_predicate(const rf_ctx* ctx, uint64_t n, uint64_t m, char family,
                       int* permutes, char* reason, size_t reason_len);

/* The constructed polynomial, reduced mod x^{q^2} + x (exponents in
 * [1, q^2-1]; colliding terms cancel in characteristic 2). */
rf_status rf_build(const rf_ctx* ctx, uint64_t n, uint64_t m, char family, rf_poly** out);
void rf_poly_free(rf_poly* poly);
size_t rf_poly_terms(const rf_poly* poly);
rf_status rf_poly_exponent(const rf_poly* poly, size_t index, uint64_t* out);
/* "x^51 + x^30 + x^23"; free with rf_string_free. */
rf_status rf_poly_text(const rf_poly* poly, char** out);

/* Exhaustive bijectivity over all q^2 field elements. */
rf_status rf_poly_is_permutation(const rf_ctx* ctx, const rf_poly* poly, int* out);

/* One table cell as JSON, polynomial included even when excluded. */
rf_status rf_construct_json(const rf_ctx* ctx, uint64_t n, uint64_t m, char family, char** out);

/* Table of cells as a JSON array in n-major, m-minor order.
 * n_list == NULL: rows are the qualifying n in [1, n_max] (gcd(n, q^2-1) = 1,
 * and n = 1 mod 3 for family N); n_max/m_max of 0 mean the periodicity
 * bounds 3(q-1) and q-1.  n_list != NULL: exactly the listed rows, no filter. */
rf_status rf_table_json(const rf_ctx* ctx, char family, const uint64_t* n_list, size_t n_count,
                        uint64_t n_max, uint64_t m_max, char** out);

/* Lemma suite at this field size: no-root scans, the four R_n identities,
 * the unit-product identity and coefficient cross-checks.  *all_pass gets
 * 0/1; the report has one "name: PASS/FAIL (detail)" line per item. */
rf_status rf_lemmas_report(const rf_ctx* ctx, uint64_t n_max, char** report, int* all_pass);

/* The full invariant suite at t = 3 plus the golden-table comparison
 * against golden_dir. */
rf_status rf_selftest(const char* golden_dir, char** report, int* all_pass);

void rf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* REDEI_H */
