#ifndef ADISC_ADISC_H
#define ADISC_ADISC_H

/* C interface to the adisc library: truncated series, Duhamel products,
   norms, multiplicativity checks and the verification suite.

   Objects are opaque handles released with their _free function. Strings
   returned through char** are owned by the caller and released with
   adisc_string_free. Every call returns an adisc_status; on failure
   adisc_last_error() describes the most recent error on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ADISC_BUILDING)
#define ADISC_API __declspec(dllexport)
#else
#define ADISC_API __declspec(dllimport)
#endif
#else
#define ADISC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adisc_status {
  ADISC_OK = 0,
  ADISC_ERR_INVALID_ARGUMENT = 1,
  ADISC_ERR_PARSE = 2,
  ADISC_ERR_DOMAIN = 3,
  ADISC_ERR_NOT_SELF_MAP = 4,
  ADISC_ERR_QUADRATURE = 5,
  ADISC_ERR_IO = 6,
  ADISC_ERR_INTERNAL = 99
} adisc_status;

typedef enum adisc_format { ADISC_FORMAT_MD = 0, ADISC_FORMAT_JSON = 1 } adisc_format;

typedef struct adisc_series adisc_series;

ADISC_API const char* adisc_version(void);
ADISC_API const char* adisc_status_name(adisc_status status);
/* Never NULL; empty when the last call on this thread succeeded. */
ADISC_API const char* adisc_last_error(void);
ADISC_API void adisc_string_free(char* s);

/* ------------------------------------------------------------ series */

/* JSON ([[re, im], ...]), shorthand ("0.5z + z^3") or a file path; padded
   to at least working_degree. */
ADISC_API adisc_status adisc_series_parse(const char* text, int working_degree, adisc_series** out);
/* im may be NULL for real coefficients. */
ADISC_API adisc_status adisc_series_from_coeffs(const double* re, const double* im, size_t count, adisc_series** out);
ADISC_API void adisc_series_free(adisc_series* f);
ADISC_API int adisc_series_degree(const adisc_series* f);
ADISC_API adisc_status adisc_series_coeff(const adisc_series* f, int k, double* re, double* im);
/* trim != 0 drops trailing zero coefficients. */
ADISC_API adisc_status adisc_series_to_json(const adisc_series* f, int trim, char** out);

ADISC_API adisc_status adisc_mul(const adisc_series* f, const adisc_series* g, adisc_series** out);
ADISC_API adisc_status adisc_duhamel(const adisc_series* f, const adisc_series* g, adisc_series** out);
/* path: 0 triangular (phi(0) = 0), 1 resampling. Either out-pointer may be NULL. */
ADISC_API adisc_status adisc_compose(const adisc_series* f, const adisc_series* phi, adisc_series** out,
                                     double* error_estimate, int* path);
ADISC_API adisc_status adisc_evaluate(const adisc_series* f, double re, double im, double* out_re, double* out_im);

/* ------------------------------------------------------------- norms */

/* space: "hardy:p=2", "bergman:p=2,a=0", "bloch", "little-bloch",
   "besov:p=2", "sup". method receives a static string; may be NULL. */
ADISC_API adisc_status adisc_norm(const adisc_series* f, const char* space, double* value, double* error_estimate,
                                  const char** method);

/* --------------------------------------------------- multiplicativity */

typedef struct adisc_mult_options {
  uint64_t seed;
  int trials;
  int working_degree;
  int duhamel; /* nonzero: Duhamel product instead of the pointwise product */
  double tol;
  unsigned threads; /* 0 = hardware concurrency */
} adisc_mult_options;

ADISC_API void adisc_mult_options_init(adisc_mult_options* options);

/* op: "comp:<series>", "mult:<series>", "bdry-eval:c=re,im",
   "point-eval:a=re,im", "matrix:<file>". pass receives 1 when the maximal
   residual is below tol. */
ADISC_API adisc_status adisc_check_multiplicative(const char* op, const char* space, const adisc_mult_options* options,
                                                  adisc_format format, int* pass, char** report);

/* ------------------------------------------------------------ verify */

typedef struct adisc_verify_options {
  uint64_t seed;
  int degree;
  unsigned threads;
  const char* only; /* id prefix filter; NULL or "" runs every check */
  int timing;       /* nonzero: include wall-time fields */
} adisc_verify_options;

ADISC_API void adisc_verify_options_init(adisc_verify_options* options);
ADISC_API adisc_status adisc_verify(const adisc_verify_options* options, adisc_format format, int* all_pass,
                                    char** report);

#ifdef __cplusplus
}
#endif

#endif
