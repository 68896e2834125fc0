/* C interface to the semisym library. Maintained by hand alongside src/lib.rs. */

#ifndef SEMISYM_H
#define SEMISYM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum SemisymStatus {
    SEMISYM_OK = 0,
    SEMISYM_NULL_POINTER = 1,
    SEMISYM_INVALID_ARGUMENT = 2,
    SEMISYM_INADMISSIBLE_R = 3,
    SEMISYM_SINGULAR = 4,
    SEMISYM_VERIFICATION_FAILED = 5,
    SEMISYM_INTERNAL = 6
} SemisymStatus;

/* Opaque polynomial in n variables over Q(r). */
typedef struct SemisymPoly SemisymPoly;

/* Static version string. */
const char *semisym_version(void);

/* Message of the last failed call on this thread; valid until the next call. */
const char *semisym_last_error(void);

/* Arguments named r are NULL for the symbolic parameter or a string such as "1/2". */

SemisymStatus semisym_build_r(const int64_t *lambda, size_t len, const char *r, SemisymPoly **out);
SemisymStatus semisym_elementary(size_t m, size_t n, SemisymPoly **out);
SemisymStatus semisym_poly_from_json(const char *text, SemisymPoly **out);

/* Strings written to char ** are released with semisym_string_free. */
SemisymStatus semisym_poly_to_json(const SemisymPoly *p, char **out);
SemisymStatus semisym_poly_to_string(const SemisymPoly *p, char **out);
size_t semisym_poly_nvars(const SemisymPoly *p);
SemisymStatus semisym_poly_eval_rho_plus(const SemisymPoly *p, const int64_t *mu, size_t len,
                                         const char *r, char **out);

/* kind is 'X' or 'Y'; t is a rational such as "3/2". */
SemisymStatus semisym_apply_operator(char kind, const char *t, const char *r, const SemisymPoly *p,
                                     SemisymPoly **out);

/* relation: subseteq, sqsubseteq, dominance, dominance_hom, prec, prec_hom. */
SemisymStatus semisym_order_test(const int64_t *a, const int64_t *b, size_t len, const char *relation,
                                 int *out);

/* suites: "all" or a comma-separated list; threads = 0 uses one per core. */
SemisymStatus semisym_verify(const char *suites, const char *r, size_t threads, char **report);

void semisym_poly_free(SemisymPoly *p);
void semisym_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* SEMISYM_H */
