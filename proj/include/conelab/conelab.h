/* conelab — locally convex cone algebra and Hyers-Ulam stabilization of
 * approximately quadratic maps.
 *
 * C API for the shared library. All entry points return a status code;
 * on CONELAB_OK (and for CONELAB_* check runs that still produce output)
 * a conelab_result handle is stored in *out and must be released with
 * conelab_result_free. conelab_last_error() returns a thread-local
 * message for the most recent failure.
 */

#ifndef CONELAB_H
#define CONELAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum conelab_status {
  CONELAB_OK = 0,        /* call succeeded; inspect conelab_result_passed */
  CONELAB_EINVAL = 1,    /* invalid argument */
  CONELAB_EPARSE = 2,    /* expression or config parse/validation error */
  CONELAB_ECHECK = 3,    /* hypothesis gate rejected the input map */
  CONELAB_EIO = 4,       /* file I/O failure */
  CONELAB_EINTERNAL = 5  /* unexpected failure */
} conelab_status;

typedef struct conelab_result conelab_result; /* opaque */

/* Law batteries for a named cone. Cone names: extended-real,
 * nonneg-extended-real, vector-1 .. vector-8, function,
 * two-point-pathology, or "all" for the whole battery. */
conelab_status conelab_laws_run(const char* cone, conelab_result** out);

/* Stabilize the map defined by an expression in variables x1..xd
 * (dimension inferred) at scale epsilon. Produces the certificate
 * (lambda, gamma, iterations, tail), the sandwich verdict and the
 * uniqueness cross-check. Rejected hypotheses return CONELAB_ECHECK with
 * the worst pair in the error message. */
conelab_status conelab_stabilize_run(const char* expr, double epsilon,
                                     double tol, int max_iter,
                                     unsigned long long seed,
                                     conelab_result** out);

/* Run a parameter sweep from config text (INI-style, [sweep] section) and
 * write the report. out_path/format, when non-NULL, override the config. */
conelab_status conelab_sweep_run(const char* config_text, const char* out_path,
                                 const char* format, conelab_result** out);

/* Banach-case verifier for an expression map: telescoping bound, the
 * eps/3 corollary and the symmetric-membership form at radius r*eps/3. */
conelab_status conelab_banach_run(const char* expr, double epsilon, double r,
                                  double tol, conelab_result** out);

/* 1 when every check in the run passed, 0 otherwise. */
int conelab_result_passed(const conelab_result* res);

/* Human-readable multi-line summary; owned by the result. */
const char* conelab_result_summary(const conelab_result* res);

/* Named scalar metrics (e.g. "lambda", "gamma", "max_gap", "bound",
 * "iterations", "slope"). CONELAB_EINVAL for unknown keys. */
conelab_status conelab_result_metric(const conelab_result* res,
                                     const char* key, double* value);

void conelab_result_free(conelab_result* res);

const char* conelab_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CONELAB_H */
