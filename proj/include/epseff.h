/**
 * @file epseff.h
 * @brief C API of the epseff library.
 *
 * epseff computes finite-size representations of the set of epsilon-efficient
 * solutions of multi-objective optimization problems. A seeded stochastic
 * search feeds candidate points to a discretized archiver; the archive
 * converges to a bounded-cardinality covering of the target set. The API
 * also exposes brute-force reference sets, set distances, cardinality
 * bounds, and decision-support queries used to validate runs.
 *
 * All handles are opaque; every function returns an epseff_status and
 * reports results through out parameters. On failure a thread-local message
 * is available via epseff_last_error().
 */

#ifndef EPSEFF_H
#define EPSEFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EPSEFF_API __declspec(dllexport)
#else
#define EPSEFF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum epseff_status {
  EPSEFF_OK = 0,
  EPSEFF_ERR_INVALID_ARGUMENT = 1, /* bad value, unknown name, null pointer */
  EPSEFF_ERR_DIMENSION = 2,        /* vector length mismatch */
  EPSEFF_ERR_DOMAIN = 3,           /* operation undefined for these values */
  EPSEFF_ERR_SIZE = 4,             /* grid or buffer capacity exceeded */
  EPSEFF_ERR_IO = 5,               /* file or parse failure */
  EPSEFF_ERR_RUNTIME = 6           /* search aborted, evaluation failure */
} epseff_status;

typedef enum epseff_archive_mode {
  EPSEFF_MODE_IMAGE = 0,
  EPSEFF_MODE_PARAMETER = 1,
  EPSEFF_MODE_UNBOUNDED = 2
} epseff_archive_mode;

typedef enum epseff_generator_kind {
  EPSEFF_GEN_UNIFORM_BOX = 0,
  EPSEFF_GEN_BINARY_FEASIBLE = 1,
  EPSEFF_GEN_BITFLIP_MUTATION = 2
} epseff_generator_kind;

typedef enum epseff_variable_kind {
  EPSEFF_VAR_CONTINUOUS = 0,
  EPSEFF_VAR_BINARY = 1
} epseff_variable_kind;

typedef struct epseff_problem epseff_problem;
typedef struct epseff_archive epseff_archive;
typedef struct epseff_pointset epseff_pointset;

/* ------------------------------------------------------------------ */
/* library                                                              */

EPSEFF_API const char* epseff_version(void);

/** Thread-local description of the most recent failure; never NULL. */
EPSEFF_API const char* epseff_last_error(void);

EPSEFF_API const char* epseff_status_name(epseff_status status);

/* ------------------------------------------------------------------ */
/* problems                                                             */

/**
 * Creates a benchmark problem by name. Names: tanaka, rudolph, production,
 * truss, knapsack, line, piecewise, constant. Numeric parameters are passed
 * as parallel key/value arrays (may be NULL when nparams is 0); unknown
 * keys are rejected.
 */
EPSEFF_API epseff_status epseff_problem_create(const char* name,
                                               const char* const* param_keys,
                                               const double* param_values,
                                               size_t nparams,
                                               epseff_problem** out);

EPSEFF_API void epseff_problem_free(epseff_problem* problem);

EPSEFF_API epseff_status epseff_problem_name(const epseff_problem* problem,
                                             const char** out);

EPSEFF_API epseff_status epseff_problem_dims(const epseff_problem* problem,
                                             size_t* n, size_t* k);

EPSEFF_API epseff_status epseff_problem_kind(const epseff_problem* problem,
                                             int* kind);

/** lower and upper each receive n values. */
EPSEFF_API epseff_status epseff_problem_domain(const epseff_problem* problem,
                                               double* lower, double* upper);

/** epsilon receives k values: the problem's suggested tolerance. */
EPSEFF_API epseff_status epseff_problem_default_epsilon(const epseff_problem* problem,
                                                        double* epsilon);

EPSEFF_API epseff_status epseff_problem_evaluate(const epseff_problem* problem,
                                                 const double* x, size_t n,
                                                 double* y, size_t k);

EPSEFF_API epseff_status epseff_problem_feasible(const epseff_problem* problem,
                                                 const double* x, size_t n,
                                                 int* feasible);

EPSEFF_API epseff_status epseff_problem_has_gradient(const epseff_problem* problem,
                                                     int* available);

/** gradients receive k*n values, gradient of objective i at row i. */
EPSEFF_API epseff_status epseff_problem_gradient(const epseff_problem* problem,
                                                 const double* x, size_t n,
                                                 double* gradients, size_t k);

/** Writes the instance table (columns j,c1,c2,w); knapsack problems only. */
EPSEFF_API epseff_status epseff_problem_dump_instance_csv(const epseff_problem* problem,
                                                          const char* path);

/* ------------------------------------------------------------------ */
/* search runs                                                          */

typedef struct epseff_run_config {
  const double* epsilon;  /* k entries, all > 0 */
  size_t epsilon_len;
  const double* delta;    /* 1 entry (broadcast) or k entries, all >= 0 */
  size_t delta_len;
  double delta_star;      /* negative: default to min(delta) */
  int mode;               /* epseff_archive_mode */
  int generator;          /* epseff_generator_kind */
  uint32_t batch_size;    /* >= 1 */
  uint64_t seed;
  uint64_t budget;        /* feasible evaluated points offered, >= 1 */
} epseff_run_config;

typedef struct epseff_run_summary {
  uint64_t total_generated;
  uint64_t total_feasible;
  uint64_t total_accepted;
  uint64_t total_removed;
  uint64_t skipped_nonfinite;
  uint64_t final_archive_size;
  double wall_time_seconds;
  double update_time_seconds;
} epseff_run_summary;

/**
 * Runs the stochastic search until config->budget feasible evaluated points
 * have been offered to the archiver. Deterministic for a fixed seed.
 *
 * image_min/image_max, when non-NULL, receive k values each: the empirical
 * per-objective range over every offered candidate.
 */
EPSEFF_API epseff_status epseff_run(const epseff_problem* problem,
                                    const epseff_run_config* config,
                                    epseff_archive** out_archive,
                                    epseff_run_summary* out_summary,
                                    double* image_min, double* image_max);

/* ------------------------------------------------------------------ */
/* archives                                                             */

/**
 * Creates an empty archive for manual updates. delta follows the run-config
 * convention; mode is an epseff_archive_mode.
 */
EPSEFF_API epseff_status epseff_archive_create(size_t n, size_t k,
                                               const double* epsilon,
                                               const double* delta,
                                               size_t delta_len,
                                               double delta_star, int mode,
                                               epseff_archive** out);

EPSEFF_API void epseff_archive_free(epseff_archive* archive);

EPSEFF_API epseff_status epseff_archive_size(const epseff_archive* archive,
                                             size_t* size);

EPSEFF_API epseff_status epseff_archive_dims(const epseff_archive* archive,
                                             size_t* n, size_t* k);

/**
 * Offers one evaluated candidate (x, y) to the archive update rule.
 * accepted, when non-NULL, receives 1 on insertion and 0 on rejection.
 */
EPSEFF_API epseff_status epseff_archive_offer(epseff_archive* archive,
                                              const double* x, size_t n,
                                              const double* y, size_t k,
                                              int* accepted);

/** x receives n values, y receives k values; birth may be NULL. */
EPSEFF_API epseff_status epseff_archive_entry(const epseff_archive* archive,
                                              size_t index, double* x, double* y,
                                              uint64_t* birth_iteration);

/** ok receives 1 when the separation and non-domination invariants hold. */
EPSEFF_API epseff_status epseff_archive_check_invariants(const epseff_archive* archive,
                                                         int* ok);

/** Number of entries whose image no other entry dominates. */
EPSEFF_API epseff_status epseff_archive_nondominated_count(const epseff_archive* archive,
                                                           size_t* count);

/** Writes the archive as CSV with header x1..xn,f1..fk at full precision. */
EPSEFF_API epseff_status epseff_archive_save_csv(const epseff_archive* archive,
                                                 const char* path);

/* ------------------------------------------------------------------ */
/* point sets (reference sets, loaded CSVs)                             */

/**
 * Brute-force grid restriction of the epsilon-efficient set. steps holds n
 * per-dimension grid spacings (or 1 entry broadcast). cell_cap of 0 selects
 * the default (250000 grid points). weak != 0 selects the weakly-efficient
 * notion (strict componentwise comparison).
 */
EPSEFF_API epseff_status epseff_reference_set(const epseff_problem* problem,
                                              const double* epsilon, size_t k,
                                              const double* steps, size_t steps_len,
                                              size_t cell_cap, int weak,
                                              epseff_pointset** out);

EPSEFF_API epseff_status epseff_pointset_load_csv(const char* path,
                                                  epseff_pointset** out);

EPSEFF_API void epseff_pointset_free(epseff_pointset* points);

EPSEFF_API epseff_status epseff_pointset_size(const epseff_pointset* points,
                                              size_t* size);

EPSEFF_API epseff_status epseff_pointset_dims(const epseff_pointset* points,
                                              size_t* n, size_t* k);

/** x receives n values (may be NULL when n is 0), y receives k values. */
EPSEFF_API epseff_status epseff_pointset_row(const epseff_pointset* points,
                                             size_t index, double* x, double* y);

EPSEFF_API epseff_status epseff_pointset_save_csv(const epseff_pointset* points,
                                                  const char* path);

/* ------------------------------------------------------------------ */
/* metrics                                                              */

/**
 * dist(B, A): worst-case nearest-neighbor d_inf from rows of B into rows of
 * A. Both matrices are row-major with k columns.
 */
EPSEFF_API epseff_status epseff_semi_dist(const double* b, size_t b_rows,
                                          const double* a, size_t a_rows,
                                          size_t k, double* out);

EPSEFF_API epseff_status epseff_hausdorff(const double* a, size_t a_rows,
                                          const double* b, size_t b_rows,
                                          size_t k, double* out);

/**
 * Cardinality bound for image-space discretization over the image box
 * [m, M]. delta follows the broadcast convention; delta_star must be > 0.
 */
EPSEFF_API epseff_status epseff_bound_image(const double* epsilon, size_t k,
                                            const double* delta, size_t delta_len,
                                            double delta_star,
                                            const double* image_min,
                                            const double* image_max, double* out);

/** Cardinality bound for parameter-space discretization over the box. */
EPSEFF_API epseff_status epseff_bound_param(double delta_star,
                                            const double* lower,
                                            const double* upper, size_t n,
                                            double* out);

/**
 * Min-norm convex combination of k gradients of length n (row-major).
 * q receives n values; alpha, when non-NULL, receives the k simplex weights.
 * A zero q certifies first-order Pareto criticality.
 */
EPSEFF_API epseff_status epseff_min_norm_direction(const double* gradients,
                                                   size_t k, size_t n, double* q,
                                                   double* alpha);

/**
 * Region-of-interest filter: selects rows of ys with |y_i - y0_i| <= tol_i
 * for all i. indices may be NULL to only count; count is in/out: capacity
 * of indices on entry, matches found on exit.
 */
EPSEFF_API epseff_status epseff_roi_select(const double* ys, size_t rows,
                                           size_t k, const double* y0,
                                           const double* tol, size_t* indices,
                                           size_t* count);

/** Number of differing coordinates between two length-n vectors. */
EPSEFF_API epseff_status epseff_hamming(const double* x1, const double* x2,
                                        size_t n, size_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EPSEFF_H */
