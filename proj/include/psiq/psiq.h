#ifndef PSIQ_PSIQ_H
#define PSIQ_PSIQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PSIQ_API __declspec(dllexport)
#else
#define PSIQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function that can fail returns one of these and
 * leaves a message for psiq_last_error() on the calling thread. */
typedef enum psiq_status {
  PSIQ_OK = 0,
  PSIQ_CHECK_FAILED = 1,      /* a suite ran and a gating check failed */
  PSIQ_ERR_DOCUMENT = 2,      /* malformed JSON or missing fields */
  PSIQ_ERR_RATIONAL = 3,      /* malformed rational string */
  PSIQ_ERR_SINGULAR = 4,      /* curve has a repeated root / zero discriminant */
  PSIQ_ERR_OFF_CURVE = 5,     /* declared point is not on the curve */
  PSIQ_ERR_LATTICE = 6,       /* malformed or degenerate lattice */
  PSIQ_ERR_SUITE = 7,         /* unknown suite, or suite and curve do not fit */
  PSIQ_ERR_ARGUMENT = 8,      /* null pointer, bad index or bad option */
  PSIQ_ERR_ARITHMETIC = 9,    /* an exact division that should exist did not */
  PSIQ_ERR_INTERNAL = 10
} psiq_status;

typedef enum psiq_curve_kind { PSIQ_ELLIPTIC = 0, PSIQ_GENUS2 = 1 } psiq_curve_kind;

typedef struct psiq_specs psiq_specs;
typedef struct psiq_report psiq_report;

typedef struct psiq_options {
  int n_max;        /* default 10 */
  double tolerance; /* default 1e-8, numeric checks only */
  int timing;       /* nonzero records elapsed time in the report */
} psiq_options;

PSIQ_API const char* psiq_version(void);
/* Message of the last failure on this thread; empty when none. */
PSIQ_API const char* psiq_last_error(void);
PSIQ_API psiq_options psiq_default_options(void);

/* Suite names, index 0.. until NULL. */
PSIQ_API const char* psiq_suite_name(size_t index);

/* A curve document or an array of them. */
PSIQ_API int psiq_specs_parse(const char* json, psiq_specs** out);
PSIQ_API int psiq_specs_random(psiq_curve_kind kind, int count, uint64_t seed, psiq_specs** out);
PSIQ_API size_t psiq_specs_count(const psiq_specs* specs);
/* Appends every spec of `from` to `into`. */
PSIQ_API int psiq_specs_append(psiq_specs* into, const psiq_specs* from);
PSIQ_API void psiq_specs_free(psiq_specs* specs);

/* Runs one suite on every spec. Returns PSIQ_OK or PSIQ_CHECK_FAILED with
 * a report, or an error code without one. */
PSIQ_API int psiq_run_suite(const psiq_specs* specs, const char* suite, const psiq_options* options,
                            psiq_report** out);
/* Appends the suite reports of `from` to `into`. */
PSIQ_API int psiq_report_merge(psiq_report* into, const psiq_report* from);
PSIQ_API int psiq_report_passed(const psiq_report* report);
/* format is "json", "csv" or "human"; free the result with psiq_string_free. */
PSIQ_API int psiq_report_emit(const psiq_report* report, const char* format, char** out);
PSIQ_API void psiq_report_free(psiq_report* report);

/* Exact values as strings, freed with psiq_string_free. */
/* psi_n of an elliptic spec as a ring element "(even) + (odd)*y". */
PSIQ_API int psiq_elliptic_psi(const psiq_specs* specs, size_t index, int n, char** out);
/* alpha_n(x0) of a genus-2 spec, x0 a "p/q" string. */
PSIQ_API int psiq_genus2_alpha_at(const psiq_specs* specs, size_t index, int n, const char* x0, char** out);
/* Calibrated scale kappa_n, 2 <= n. */
PSIQ_API int psiq_genus2_kappa(int n, char** out);

PSIQ_API void psiq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
