#ifndef SPINX_SPINX_H
#define SPINX_SPINX_H

/* C interface to libspinx: the order-unit space V x R over a finite-
 * dimensional normed space V, its spectral calculus and the spin-factor
 * product, plus the named verification campaigns.
 *
 * Every fallible call returns a spinx_status. On failure the message is
 * available from spinx_last_error() on the same thread until the next call.
 * Strings returned through char** are owned by the caller and released with
 * spinx_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPINX_BUILDING)
#    define SPINX_API __declspec(dllexport)
#  else
#    define SPINX_API __declspec(dllimport)
#  endif
#else
#  define SPINX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spinx_status {
  SPINX_OK = 0,
  SPINX_INVALID_ARGUMENT,
  SPINX_INVALID_SPACE,
  SPINX_DIMENSION_MISMATCH,
  SPINX_SPACE_MISMATCH,
  SPINX_UNSUPPORTED_SPACE,
  SPINX_NOT_ORTHOGONAL,
  SPINX_ZERO_ELEMENT,
  SPINX_NOT_POSITIVE,
  SPINX_NOT_IN_CONE,
  SPINX_MISMATCHED_FRAME,
  SPINX_INCONSISTENT,
  SPINX_PARSE,
  SPINX_INTERNAL
} spinx_status;

typedef enum spinx_zero_product {
  SPINX_PRODUCT_NOT_ZERO = 0,
  SPINX_PRODUCT_ZERO_INDEPENDENT,
  SPINX_PRODUCT_ZERO_DEPENDENT_ORTHOGONAL
} spinx_zero_product;

typedef struct spinx_space spinx_space;
typedef struct spinx_element spinx_element;

SPINX_API const char* spinx_version(void);
SPINX_API const char* spinx_status_string(spinx_status status);
SPINX_API const char* spinx_last_error(void);
SPINX_API void spinx_string_free(char* s);

/* lp:<p>:<n> (p may be "inf"), hilbert:<n>, weighted:<file.json>. */
SPINX_API spinx_status spinx_space_parse(const char* spec, spinx_space** out);
SPINX_API spinx_status spinx_space_from_json(const char* json, spinx_space** out);
SPINX_API spinx_status spinx_space_to_json(const spinx_space* space, char** out);
SPINX_API void spinx_space_free(spinx_space* space);
SPINX_API size_t spinx_space_dim(const spinx_space* space);
/* 1 if strictly convex, 0 if not, -1 on a null handle. */
SPINX_API int spinx_space_strictly_convex(const spinx_space* space);
SPINX_API spinx_status spinx_space_norm(const spinx_space* space, const double* coords,
                                        size_t n, double* out);

SPINX_API spinx_status spinx_element_create(const spinx_space* space, const double* coords,
                                            size_t n, double alpha, spinx_element** out);
/* "[c1,...,cn];alpha" */
SPINX_API spinx_status spinx_element_parse(const spinx_space* space, const char* literal,
                                           spinx_element** out);
SPINX_API void spinx_element_free(spinx_element* x);
SPINX_API double spinx_element_alpha(const spinx_element* x);
/* Copies min(cap, dim) coordinates and returns dim. */
SPINX_API size_t spinx_element_coords(const spinx_element* x, double* out, size_t cap);
SPINX_API spinx_status spinx_element_to_json(const spinx_element* x, char** out);
SPINX_API spinx_status spinx_order_unit_norm(const spinx_element* x, double* out);

SPINX_API spinx_status spinx_abs(const spinx_element* x, spinx_element** out);
SPINX_API spinx_status spinx_sqrt(const spinx_element* x, spinx_element** out);
SPINX_API spinx_status spinx_power(const spinx_element* x, int n, spinx_element** out);
SPINX_API spinx_status spinx_circ(const spinx_element* x, const spinx_element* y,
                                  spinx_element** out);
SPINX_API spinx_status spinx_spectral_json(const spinx_element* x, char** out);
SPINX_API spinx_status spinx_orthogonal(const spinx_element* x, const spinx_element* y,
                                        int* out);
SPINX_API spinx_status spinx_zero_product_classify(const spinx_element* x,
                                                   const spinx_element* y,
                                                   spinx_zero_product* out);

typedef struct spinx_campaign_config {
  uint64_t seed;
  size_t samples;
  size_t resolution;
  double tol;
  double p;             /* lp2 exponent; 0 selects the default of 4 */
  const char* csv_path; /* lp2 defect surface, or NULL */
} spinx_campaign_config;

/* seed 42, samples 10000, resolution 256, tol 1e-9, p 0, csv_path NULL. */
SPINX_API void spinx_campaign_config_init(spinx_campaign_config* cfg);

/* Names: axioms, bilinearity, h1, jordan, l42, lp2, probe. space may be NULL
 * for the campaign's default. *expectation_met is 1 when the outcome is the
 * one the theory predicts. */
SPINX_API spinx_status spinx_campaign_run(const char* name, const spinx_space* space,
                                          const spinx_campaign_config* cfg, char** report_json,
                                          int* expectation_met);

#ifdef __cplusplus
}
#endif

#endif
