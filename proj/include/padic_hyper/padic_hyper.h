/* C interface to the padic-hyper library.
 *
 * Every function returns a ph_status. On failure, ph_last_error() gives a
 * message for the calling thread. Strings written into caller buffers are
 * NUL-terminated; when the buffer is too small the call fails with
 * PH_ERR_INVALID and *len (if given) holds the required size, NUL excluded.
 */
#ifndef PADIC_HYPER_H
#define PADIC_HYPER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PH_API __declspec(dllexport)
#else
#define PH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ph_status {
  PH_OK = 0,
  PH_ERR_INVALID = 2,
  PH_ERR_IO = 3,
  PH_ERR_DOMAIN = 4,
  PH_ERR_PRECISION = 5,
  PH_ERR_BUDGET = 6,
  PH_ERR_INTERNAL = 7
} ph_status;

typedef struct ph_context ph_context;
typedef struct ph_report ph_report;

PH_API const char* ph_version(void);
PH_API const char* ph_last_error(void);

/* cache_dir: gamma-table cache directory, or NULL to build in memory. */
PH_API ph_status ph_context_create(uint32_t p, int precision, const char* cache_dir, ph_context** out);
PH_API void ph_context_destroy(ph_context* ctx);

/* nGn[top; bot | t] with comma-separated rationals ("1/4,3/4").
 * Writes the value as "p^v * u (mod p^r)". precision_used may be NULL. */
PH_API ph_status ph_gfun(const ph_context* ctx, const char* top, const char* bot, int64_t t, char* buf,
                         size_t cap, size_t* len, int* precision_used);

typedef struct ph_count_result {
  int64_t total;
  int64_t trace;
  int64_t infinity_points;
  int64_t affine;
  char convention[48];
} ph_count_result;

/* family: "dik" (lambda), "jacobi" (lambda), "hessian" (d),
 * "weierstrass" (a2, a4, a6). infinity applies to jacobi only. */
PH_API ph_status ph_count(uint32_t p, const char* family, const int64_t* params, size_t nparams, int infinity,
                          ph_count_result* out);

typedef struct ph_sweep_config {
  const char* identity; /* "thm-1.1" ... "thm-1.8", "xcheck-...", lemma id, "lemmas", "all" */
  uint32_t p_min;
  uint32_t p_max;
  int precision;
  const int64_t* params; /* explicit lambda / d values; NULL or nparams 0 = all */
  size_t nparams;
  int infinity; /* 0, 1, 2, or -1 to calibrate */
  unsigned jobs;
  const char* cache_dir; /* NULL disables the cache */
  uint32_t eisenstein_cap;
} ph_sweep_config;

/* Fills defaults: all identities, p in [5, 47], N = 3, calibrated infinity,
 * one job, no cache, Eisenstein cap 50. */
PH_API void ph_sweep_config_init(ph_sweep_config* cfg);
PH_API ph_status ph_sweep(const ph_sweep_config* cfg, ph_report** out);

/* Gross-Koblitz for every j and Hasse-Davenport for every (m, chi, psi)
 * at one prime. */
PH_API ph_status ph_gauss(uint32_t p, int precision, uint32_t cap, const char* cache_dir, ph_report** out);

typedef struct ph_summary {
  int64_t checked;
  int64_t passed;
  int64_t failed;
  int64_t skipped;
  uint32_t p_lo;
  uint32_t p_hi;
} ph_summary;

PH_API ph_status ph_report_summary(const ph_report* rep, ph_summary* out, int* infinity_convention);
PH_API size_t ph_report_group_count(const ph_report* rep);
/* Per-identity totals, in report order. *identity stays valid for the
 * lifetime of the report. */
PH_API ph_status ph_report_group(const ph_report* rep, size_t index, const char** identity, ph_summary* out);

typedef struct ph_verdict {
  const char* identity;
  uint32_t p;
  const char* params_json;
  const char* lhs;
  const char* rhs;
  int equal;
  int precision;
  const char* skip; /* NULL unless skipped */
} ph_verdict;

PH_API size_t ph_report_size(const ph_report* rep);
/* Pointers in *out stay valid for the lifetime of the report. */
PH_API ph_status ph_report_verdict(const ph_report* rep, size_t index, ph_verdict* out);
/* format: "json" or "csv". */
PH_API ph_status ph_report_write(const ph_report* rep, const char* path, const char* format);
PH_API ph_status ph_report_render(const ph_report* rep, const char* format, char* buf, size_t cap, size_t* len);
PH_API void ph_report_destroy(ph_report* rep);

PH_API size_t ph_identity_count(void);
PH_API const char* ph_identity_name(size_t index);

#ifdef __cplusplus
}
#endif

#endif
