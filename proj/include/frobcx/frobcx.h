/*
 * frobcx — Frobenius complexes of finitely generated submonoids of N^d:
 * exact reduced Betti numbers, wedge-decomposition verification for monoid
 * extensions, and multigraded Poincare series.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns a frobcx_status, writes results through out-parameters, and leaves
 * a human-readable message retrievable with frobcx_last_error() on failure.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with frobcx_string_free().
 *
 * JSON conventions:
 *   monoid spec     {"dim": d, "generators": [[..], ..]}
 *                   or, for d = 1, {"generators": [2, 3]}
 *   extension spec  {"base": <monoid spec>, "rho": <int|array>, "r": <int>}
 *   cap             an integer for d = 1, an array of d integers otherwise
 *   field names     "gf2", "gf3", "gf5", "gf<p>" (p prime), "rational"
 *   formats         tables: "tsv" | "json"; series: "text" | "json"
 *   family params   {"a":2,"b":3} / {"p":2,"q":3,"r":5} / {"a":4,"d":3}
 *                   / {"p":2,"q":3,"n":2}
 */

#ifndef FROBCX_H
#define FROBCX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frobcx_status {
    FROBCX_OK = 0,            /* success; for checks: the property holds   */
    FROBCX_MISMATCH = 1,      /* a verification or comparison came out unequal */
    FROBCX_INVALID_INPUT = 2, /* malformed spec, flag, or violated precondition */
    FROBCX_INTERNAL_ERROR = 3 /* out of memory or an unexpected failure     */
} frobcx_status;

typedef struct frobcx_monoid frobcx_monoid;       /* submonoid of N^d */
typedef struct frobcx_extension frobcx_extension; /* monoid with an adjoined r-th part */

const char* frobcx_version(void);

/* Message for the most recent failure on this thread; empty string if none.
 * Valid until the next frobcx call on the same thread. */
const char* frobcx_last_error(void);

void frobcx_string_free(char* s);

/* --- handles ------------------------------------------------------------ */

/* Sets *is_extension to 1 when the JSON carries an extension spec (a "base"
 * key), 0 for a plain monoid spec. Does not validate the spec. */
frobcx_status frobcx_spec_kind(const char* spec_json, int* is_extension);

frobcx_status frobcx_monoid_parse(const char* spec_json, frobcx_monoid** out);
frobcx_status frobcx_monoid_from_generators(const int64_t* generators, size_t count,
                                            frobcx_monoid** out); /* d = 1 */
void frobcx_monoid_free(frobcx_monoid* m);

frobcx_status frobcx_extension_parse(const char* spec_json, frobcx_extension** out);
frobcx_status frobcx_extension_create(const frobcx_monoid* base, const int64_t* rho,
                                      size_t rho_len, int64_t r, frobcx_extension** out);
void frobcx_extension_free(frobcx_extension* e);

/* --- Betti tables (grade, homological degree, count triples) ------------- */

frobcx_status frobcx_monoid_betti_table(const frobcx_monoid* m, const char* cap_json,
                                        const char* field, const char* format, char** out);
frobcx_status frobcx_extension_betti_table(const frobcx_extension* e, const char* cap_json,
                                           const char* field, const char* format, char** out);

/* --- Poincare series ------------------------------------------------------ */

frobcx_status frobcx_monoid_poincare(const frobcx_monoid* m, const char* cap_json,
                                     const char* field, const char* format, char** out);
frobcx_status frobcx_extension_poincare(const frobcx_extension* e, const char* cap_json,
                                        const char* field, const char* format, char** out);

/* --- theorem-level checks -------------------------------------------------
 * Both write a JSON report and set *pass. The status is FROBCX_OK when every
 * grade agrees and FROBCX_MISMATCH otherwise; the report is produced either
 * way. */

frobcx_status frobcx_verify_extension(const frobcx_extension* e, const char* cap_json,
                                      const char* field, char** report_json, int* pass);

/* Requires r = 2: each grade with half a rho adjoined must carry the
 * once-suspended homology of its partner. */
frobcx_status frobcx_suspension_check(const frobcx_extension* e, const char* cap_json,
                                      const char* field, char** report_json, int* pass);

/* --- closed-form series families ----------------------------------------- */

/* The rational expression for a family, as display text. */
frobcx_status frobcx_closed_form(const char* family, const char* params_json, char** out);

/* Truncated expansion of the family's closed form. */
frobcx_status frobcx_closed_form_expand(const char* family, const char* params_json,
                                        const char* cap_json, const char* format, char** out);

/* Compares the direct series of the family's semigroup with the expansion of
 * its closed form, both truncated at the cap. Sets *equal; the status is
 * FROBCX_OK when they agree and FROBCX_MISMATCH otherwise. */
frobcx_status frobcx_compare_series(const char* family, const char* params_json,
                                    const char* cap_json, const char* field,
                                    char** summary_json, int* equal);

#ifdef __cplusplus
}
#endif

#endif /* FROBCX_H */
