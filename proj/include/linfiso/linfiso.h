/*
 * C interface to linfiso: exact decision of whether a subspace of l_inf^N is
 * isometric to l_inf^n, with the projection constant and distance bounds.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Functions return a linfiso_status; on failure a human-readable message is
 * available from linfiso_last_error() on the calling thread.
 * Reports carry both a plain-text and a JSON rendering. Every number in the
 * JSON is an exact decimal integer or "p/q" string.
 */
#ifndef LINFISO_H
#define LINFISO_H

#include <stddef.h>
#include <stdint.h>

#if defined(LINFISO_BUILDING)
#define LINFISO_API __attribute__((visibility("default")))
#else
#define LINFISO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum linfiso_status {
  LINFISO_OK = 0,
  LINFISO_ERR_NULL_ARGUMENT = 1,
  LINFISO_ERR_PARSE = 2,
  LINFISO_ERR_INVALID_BASIS = 3,
  LINFISO_ERR_DIMENSION = 4,
  LINFISO_ERR_INADMISSIBLE_SET = 5,
  LINFISO_ERR_USAGE = 6,
  LINFISO_ERR_INTERNAL = 7
} linfiso_status;

typedef enum linfiso_mode {
  LINFISO_MODE_AUTO = 0,
  LINFISO_MODE_GENERAL = 1
} linfiso_mode;

typedef enum linfiso_basis_kind {
  LINFISO_BASIS_ANNIHILATOR = 0,
  LINFISO_BASIS_SPANNING = 1
} linfiso_basis_kind;

typedef struct linfiso_subspace linfiso_subspace;
typedef struct linfiso_report linfiso_report;

LINFISO_API const char* linfiso_version(void);
LINFISO_API const char* linfiso_status_name(linfiso_status status);
/* Message for the last failed call on this thread; "" if none. */
LINFISO_API const char* linfiso_last_error(void);

/* Instance text: "N m annihilator|spanning" then N rows of rationals. */
LINFISO_API linfiso_status linfiso_subspace_parse(const char* text, linfiso_subspace** out);
LINFISO_API linfiso_status linfiso_subspace_load(const char* path, linfiso_subspace** out);
LINFISO_API void linfiso_subspace_free(linfiso_subspace* subspace);
LINFISO_API size_t linfiso_subspace_ambient(const linfiso_subspace* subspace);
LINFISO_API size_t linfiso_subspace_codim(const linfiso_subspace* subspace);
/* Canonical annihilator-form instance text. */
LINFISO_API linfiso_status linfiso_subspace_serialize(const linfiso_subspace* subspace,
                                                      linfiso_report** out);

/* *verdict is 1 when the subspace is isometric to l_inf^n, else 0. */
LINFISO_API linfiso_status linfiso_decide(const linfiso_subspace* subspace, linfiso_mode mode,
                                          int* verdict, linfiso_report** out);
/* Projection constant (lower) and best distance bound (upper). */
LINFISO_API linfiso_status linfiso_bounds(const linfiso_subspace* subspace, int per_set,
                                          linfiso_report** out);
LINFISO_API linfiso_status linfiso_projconst(const linfiso_subspace* subspace,
                                             int emit_projection, linfiso_report** out);

typedef struct linfiso_crosscheck_options {
  uint64_t seed;
  size_t count;
  size_t max_n; /* largest ambient dimension N */
  size_t max_m;
  long entry_range;
  int rational_entries;
  unsigned jobs;
} linfiso_crosscheck_options;

LINFISO_API void linfiso_crosscheck_defaults(linfiso_crosscheck_options* options);
LINFISO_API linfiso_status linfiso_crosscheck(const linfiso_crosscheck_options* options,
                                              size_t* disagreements, linfiso_report** out);

typedef struct linfiso_gen_options {
  uint64_t seed;
  size_t n; /* dimension of V */
  size_t m; /* codimension */
  long entry_range;
  int rational_entries;
  linfiso_basis_kind kind;
} linfiso_gen_options;

LINFISO_API void linfiso_gen_defaults(linfiso_gen_options* options);
/* The report text is the instance file; the JSON holds it under "instance". */
LINFISO_API linfiso_status linfiso_generate(const linfiso_gen_options* options,
                                            linfiso_report** out);

LINFISO_API const char* linfiso_report_text(const linfiso_report* report);
LINFISO_API const char* linfiso_report_json(const linfiso_report* report);
LINFISO_API void linfiso_report_free(linfiso_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LINFISO_H */
