#ifndef GICODES_H
#define GICODES_H

/*
 * C interface to the gicodes library: constacyclic block codes over residue
 * class rings of the Gaussian integers, with coset-leader syndrome decoding
 * of Mannheim-weight-1 errors.
 *
 * All arithmetic is exact. Gaussian integers cross this interface as pairs of
 * int64 components; vectors of ring elements are flat arrays
 * [re0, im0, re1, im1, ...]. Strings returned through char** are allocated by
 * the library and must be released with gic_string_free.
 *
 * Every fallible call returns a gic_status; on failure, gic_last_error()
 * gives a human-readable message for the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GICODES_API __declspec(dllexport)
#else
#define GICODES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gic_status {
    GIC_OK = 0,
    GIC_ERR_INVALID_ARGUMENT = 1,
    GIC_ERR_INVALID_PRIME = 2,
    GIC_ERR_NOT_A_UNIT = 3,
    GIC_ERR_NO_GENERATOR = 4,
    GIC_ERR_WRONG_MODULUS_SHAPE = 5,
    GIC_ERR_NON_UNIT_LEADING_COEFF = 6,
    GIC_ERR_SYNDROME_COLLISION = 7,
    GIC_ERR_UNCORRECTABLE = 8,
    GIC_ERR_TOO_LARGE = 9,
    GIC_ERR_BAD_DESCRIPTOR = 10,
    GIC_ERR_INTERNAL = 11
} gic_status;

/* Opaque handles; immutable once built and safe for concurrent reads. */
typedef struct gic_code gic_code;
typedef struct gic_table gic_table;

GICODES_API const char *gic_status_name(gic_status status);

/* Message from the most recent failing call on this thread. */
GICODES_API const char *gic_last_error(void);

/*
 * Code construction. Roots are optional overrides for the deterministic
 * generator scan: pass NULL for the default, or a pointer to [re, im]
 * (a pair of those, [re1, im1, re2, im2], for the half-length family).
 *
 *  - quarter: length phi(p^k_exp)/4 over G_{pi^k_exp}, twist i (plus_sign
 *    nonzero) or -i; generated by x - g with g^n = twist.
 *  - half:    length phi(p^k_exp)/2, twist -1; generated by
 *    (x - g_plus)(x - g_minus).
 *  - multiprime: ring modulo a product of distinct Gaussian primes, length
 *    phi(length_from_p) for one of the listed primes, twist 1; generated by
 *    x - e with e^n = 1.
 */
GICODES_API gic_status gic_code_build_quarter(int64_t p, int k_exp, int plus_sign,
                                              const int64_t *root, gic_code **out);
GICODES_API gic_status gic_code_build_half(int64_t p, int k_exp, const int64_t *roots,
                                           gic_code **out);
GICODES_API gic_status gic_code_build_multiprime(const int64_t *primes, size_t num_primes,
                                                 int64_t length_from_p, const int64_t *root,
                                                 gic_code **out);

/* Loads a code descriptor, validating gen * check = x^n - lambda. */
GICODES_API gic_status gic_code_from_json(const char *text, gic_code **out);
GICODES_API void gic_code_free(gic_code *code);

GICODES_API size_t gic_code_length(const gic_code *code);    /* n */
GICODES_API size_t gic_code_dim(const gic_code *code);       /* k */
GICODES_API int64_t gic_code_ring_size(const gic_code *code); /* N = norm(delta) */

/* Descriptor JSON; with include_matrices nonzero, adds "G" and "H". */
GICODES_API gic_status gic_code_to_json(const gic_code *code, int include_matrices, char **out);
GICODES_API gic_status gic_code_to_text(const gic_code *code, char **out);

/* message: 2k entries; codeword out: 2n entries. */
GICODES_API gic_status gic_encode(const gic_code *code, const int64_t *message,
                                  int64_t *codeword);

/* received: 2n entries; syndrome out: 2*(n-k) entries, ascending degree. */
GICODES_API gic_status gic_syndrome(const gic_code *code, const int64_t *received,
                                    int64_t *syndrome);
GICODES_API gic_status gic_is_codeword(const gic_code *code, const int64_t *vec, int *result);

/* Coset-leader table over the 4n + 1 Mannheim-weight-<=1 error patterns. */
GICODES_API gic_status gic_table_build(const gic_code *code, gic_table **out);
GICODES_API void gic_table_free(gic_table *table);
GICODES_API size_t gic_table_size(const gic_table *table);
GICODES_API gic_status gic_table_to_json(const gic_table *table, char **out);
GICODES_API gic_status gic_table_to_text(const gic_table *table, char **out);

/*
 * Syndrome decoding. On GIC_OK fills codeword (2n), error (2n) and message
 * (2k). Returns GIC_ERR_UNCORRECTABLE, leaving outputs untouched, when the
 * syndrome is not covered by the table.
 */
GICODES_API gic_status gic_decode(const gic_code *code, const gic_table *table,
                                  const int64_t *received, int64_t *codeword, int64_t *error,
                                  int64_t *message);

/*
 * Round-trip verification: decodes every weight-<=1 corruption of encoded
 * messages (samples drawn from the seeded generator, or every message when
 * samples = 0) and re-derives the syndrome table independently. Fills a
 * report JSON and sets *passed to 1 iff there were no failures. A nonzero
 * with_min_distance additionally runs the exhaustive minimum-Mannheim-
 * distance search, which fails with GIC_ERR_TOO_LARGE when N^k exceeds the
 * enumeration bound.
 */
GICODES_API gic_status gic_verify(const gic_code *code, uint64_t samples, uint64_t seed,
                                  int with_min_distance, char **report_json, int *passed);

/* "a+bi" display form, e.g. "-2+1i". Fails if the buffer is too small. */
GICODES_API gic_status gic_format_gaussian(int64_t re, int64_t im, char *buf, size_t buf_len);

/* Parses "3+1i", "-2-2i", "5", "4i", "-i". */
GICODES_API gic_status gic_parse_gaussian(const char *text, int64_t *re, int64_t *im);

GICODES_API void gic_string_free(char *text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GICODES_H */
