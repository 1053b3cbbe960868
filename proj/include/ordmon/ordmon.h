/* C interface to the ordmon library.
 *
 * All functions return an ordmon_status; results are passed back through out
 * parameters.  Strings returned through char** are owned by the caller and
 * must be released with ordmon_string_free.  On any failure,
 * ordmon_last_error() describes the problem for the calling thread.
 *
 * Families are named by the lowercase strings "d", "pd", "id", "c", "ic",
 * "pc".  Partial maps are passed as dense image rows: images[x-1] is the
 * image of x, 0 meaning "undefined".
 */
#ifndef ORDMON_H
#define ORDMON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ordmon_status {
  ORDMON_OK = 0,
  ORDMON_ERR_INVALID_ARGUMENT = 1,
  ORDMON_ERR_UNSUPPORTED = 2,
  ORDMON_ERR_RESOURCE_LIMIT = 3,
  ORDMON_ERR_STEP_CAP = 4,
  ORDMON_ERR_INTERNAL = 5
} ordmon_status;

/* Opaque partial self-map of {1..n}. */
typedef struct ordmon_map ordmon_map;

const char* ordmon_last_error(void);
void ordmon_string_free(char* s);

/* ---- maps ---------------------------------------------------------- */

ordmon_status ordmon_map_create(int n, const int* images, ordmon_map** out);
ordmon_status ordmon_map_identity(int n, ordmon_map** out);
/* Left-to-right composition: x(first, then second). */
ordmon_status ordmon_map_compose(const ordmon_map* first,
                                 const ordmon_map* second, ordmon_map** out);
int ordmon_map_n(const ordmon_map* m);
ordmon_status ordmon_map_images(const ordmon_map* m, int* buf, size_t buflen);
ordmon_status ordmon_map_classify(const ordmon_map* m, int* order_decreasing,
                                  int* order_preserving, int* injective,
                                  int* full);
ordmon_status ordmon_map_in_family(const ordmon_map* m, const char* family,
                                   int* out);
void ordmon_map_free(ordmon_map* m);

/* ---- whole-family operations --------------------------------------- */

/* JSON array of {"n":..,"images":[..]} in enumeration order. */
ordmon_status ordmon_enumerate_json(const char* family, int n, char** out);
ordmon_status ordmon_count(const char* family, int n, uint64_t* out);
ordmon_status ordmon_normal_form_count(const char* family, int n,
                                       uint64_t* out);

/* JSON {"word": "...", "derivation": {...}}. */
ordmon_status ordmon_normalize(const char* family, int n, const char* word,
                               char** out);

/* Verification report as JSON; out_pass is 1 iff the verdict is "pass".
 * max_states / max_steps of 0 select the defaults. */
ordmon_status ordmon_verify(const char* family, int n, uint64_t max_states,
                            uint64_t max_steps, char** out, int* out_pass);
ordmon_status ordmon_verify_pd(int n, char** out, int* out_pass);

/* One relation per line: "<id>: <lhs> = <rhs>". */
ordmon_status ordmon_presentation_text(const char* family, int n, char** out);

/* JSON {"status":..,"size":..,"method":..}. */
ordmon_status ordmon_presented_size(const char* family, int n,
                                    uint64_t max_states, uint64_t max_steps,
                                    char** out);

ordmon_status ordmon_cayley_dot(const char* family, int n, char** out);

/* Generator word for a member of IC (images as for ordmon_map_create). */
ordmon_status ordmon_factorize_ic(int n, const int* images, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ORDMON_H */
