#ifndef LCN_LCN_H
#define LCN_LCN_H

/* C interface to the 1D linear convolutional network toolkit.
 *
 * Objects are opaque handles released with their _destroy function. Every
 * call returns an lcn_status; on failure lcn_last_error() describes the
 * problem (thread-local, valid until the next failing call on that thread).
 *
 * String outputs use (buf, cap, needed): the full length excluding the
 * terminator is stored in *needed; if cap is too small the call returns
 * LCN_ERR_BUFFER_TOO_SMALL and writes nothing. buf may be NULL when cap is 0.
 * Big integers are returned as decimal strings. */

#include <stddef.h>
#include <stdint.h>

#if defined(LCN_BUILDING_LIBRARY)
#define LCN_API __attribute__((visibility("default")))
#else
#define LCN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LCN_OK = 0,
  LCN_ERR_INVALID_ARGUMENT = 1,
  LCN_ERR_UNSUPPORTED = 2,
  LCN_ERR_INTERNAL = 3,
  LCN_ERR_BUFFER_TOO_SMALL = 4,
  LCN_ERR_NULL = 5
} lcn_status;

typedef enum { LCN_FORMAT_TEXT = 0, LCN_FORMAT_JSON = 1 } lcn_format;

typedef struct lcn_arch lcn_arch;
typedef struct lcn_ideal lcn_ideal;
typedef struct lcn_critpoints lcn_critpoints;
typedef struct lcn_verify_report lcn_verify_report;

LCN_API const char* lcn_last_error(void);
LCN_API const char* lcn_status_name(lcn_status status);

/* Architectures. The final stride is ignored and stored as 1. */
LCN_API lcn_status lcn_arch_create(const int* filter_sizes, const int* strides, size_t layers,
                                   lcn_arch** out);
/* "3,2,2" and "2,2,1"; strides may be NULL for all-ones. */
LCN_API lcn_status lcn_arch_parse(const char* filter_sizes, const char* strides, lcn_arch** out);
LCN_API void lcn_arch_destroy(lcn_arch* arch);
LCN_API lcn_status lcn_arch_layers(const lcn_arch* arch, size_t* layers);
LCN_API lcn_status lcn_arch_filter_sizes(const lcn_arch* arch, int* buf, size_t cap, size_t* needed);
LCN_API lcn_status lcn_arch_strides(const lcn_arch* arch, int* buf, size_t cap, size_t* needed);
LCN_API lcn_status lcn_arch_output_size(const lcn_arch* arch, int* k);
LCN_API lcn_status lcn_arch_dimension(const lcn_arch* arch, int* dim);
LCN_API lcn_status lcn_arch_is_reduced(const lcn_arch* arch, int* reduced);
LCN_API lcn_status lcn_arch_reduce(const lcn_arch* arch, lcn_arch** out);
LCN_API lcn_status lcn_arch_describe(const lcn_arch* arch, char* buf, size_t cap, size_t* needed);

/* Vanishing equations of the neurovariety in c0..c{k-1}. */
LCN_API lcn_status lcn_ideal_compute(const lcn_arch* arch, lcn_ideal** out);
LCN_API void lcn_ideal_destroy(lcn_ideal* ideal);
LCN_API lcn_status lcn_ideal_size(const lcn_ideal* ideal, size_t* count);
LCN_API lcn_status lcn_ideal_enumerated_minors(const lcn_ideal* ideal, size_t* count);
LCN_API lcn_status lcn_ideal_generator_text(const lcn_ideal* ideal, size_t index, char* buf, size_t cap,
                                            size_t* needed);
LCN_API lcn_status lcn_ideal_generator_json(const lcn_ideal* ideal, size_t index, char* buf, size_t cap,
                                            size_t* needed);
LCN_API lcn_status lcn_ideal_generator_provenance(const lcn_ideal* ideal, size_t index, char* buf,
                                                  size_t cap, size_t* needed);
/* Exact check at a point given as decimal rationals ("3", "-2/7"). Stores
 * the index of the first non-vanishing generator, or the ideal size. */
LCN_API lcn_status lcn_ideal_check_point(const lcn_ideal* ideal, const char* const* coords, size_t n,
                                         size_t* first_violated);
LCN_API lcn_status lcn_ideal_render(const lcn_ideal* ideal, lcn_format format, int provenance, char* buf,
                                    size_t cap, size_t* needed);

/* Generic ED degree C_k of filter sizes k_1..k_L (each >= 2). */
LCN_API lcn_status lcn_ed_degree(const int* filter_sizes, size_t n, char* buf, size_t cap, size_t* needed);
/* Critical-point count of an architecture: C of its reduction, 1 if linear. */
LCN_API lcn_status lcn_arch_ed_degree(const lcn_arch* arch, char* buf, size_t cap, size_t* needed);
LCN_API lcn_status lcn_ed_merge_tree(const int* filter_sizes, size_t n, lcn_format format, char* buf,
                                     size_t cap, size_t* needed);
LCN_API lcn_status lcn_ed_table(int k1max, int k2max, char* buf, size_t cap, size_t* needed);
LCN_API lcn_status lcn_fully_connected_count(int m, int n, int r, char* buf, size_t cap, size_t* needed);

LCN_API lcn_status lcn_resultant_render(const lcn_arch* arch, int print_matrices, lcn_format format,
                                        char* buf, size_t cap, size_t* needed);

/* Composes explicit filters ("1,2,3;4,5", rationals allowed) or, when
 * filters is NULL, a seeded random sample. */
LCN_API lcn_status lcn_compose_render(const lcn_arch* arch, const char* filters, uint64_t seed,
                                      lcn_format format, char* buf, size_t cap, size_t* needed);

typedef struct {
  size_t starts;          /* Newton starts */
  uint64_t seed;          /* start-point seed */
  uint64_t data_seed;     /* training data seed */
  int d_out;              /* output dimension d_L of the training data */
  int extra_samples;      /* N = d_0 + extra_samples */
} lcn_solve_options;

LCN_API void lcn_solve_options_default(lcn_solve_options* options);

/* Critical points of quadratic-loss training on seeded Gaussian data. The
 * neurovariety must be a hypersurface (LCN_ERR_UNSUPPORTED otherwise). */
LCN_API lcn_status lcn_critpoints_training(const lcn_arch* arch, const lcn_solve_options* options,
                                           lcn_critpoints** out);
/* Critical points of (w-u)^T T (w-u) on {f = 0}. T is k x k row-major and
 * symmetric; f is a polynomial in letters A.. or c0..; expected may be NULL
 * or a decimal string used for early stopping and the verdict. */
LCN_API lcn_status lcn_critpoints_weighted(size_t k, const double* T, const double* u, const char* f,
                                           const char* expected, const lcn_solve_options* options,
                                           lcn_critpoints** out);
LCN_API void lcn_critpoints_destroy(lcn_critpoints* cp);
LCN_API lcn_status lcn_critpoints_counts(const lcn_critpoints* cp, size_t* distinct, size_t* real,
                                         size_t* starts_run);
/* -1 shortfall, 0 matches the expected count (or none known), 1 excess. */
LCN_API lcn_status lcn_critpoints_verdict(const lcn_critpoints* cp, int* verdict);
LCN_API lcn_status lcn_critpoints_expected(const lcn_critpoints* cp, char* buf, size_t cap, size_t* needed);
LCN_API lcn_status lcn_critpoints_max_residual(const lcn_critpoints* cp, double* residual);
LCN_API lcn_status lcn_critpoints_conjugation_closed(const lcn_critpoints* cp, int* closed);
/* w_re and w_im receive k entries each. */
LCN_API lcn_status lcn_critpoints_point(const lcn_critpoints* cp, size_t index, double* w_re, double* w_im,
                                        size_t k, double* residual, int* is_real);
LCN_API lcn_status lcn_critpoints_render(const lcn_critpoints* cp, lcn_format format, char* buf, size_t cap,
                                         size_t* needed);

/* Exact sampling check of the generated equations, Jacobian rank of the
 * parametrization and, when the reduction has two or more layers, a
 * non-membership smoke test on smoke_trials random points. */
LCN_API lcn_status lcn_verify(const lcn_arch* arch, size_t samples, uint64_t seed, size_t smoke_trials,
                              lcn_verify_report** out);
LCN_API void lcn_verify_destroy(lcn_verify_report* report);
LCN_API lcn_status lcn_verify_summary(const lcn_verify_report* report, size_t* failures, int* jacobian_rank,
                                      int* expected_dim, size_t* smoke_violations, size_t* smoke_trials);
LCN_API lcn_status lcn_verify_passed(const lcn_verify_report* report, int* passed);
LCN_API lcn_status lcn_verify_render(const lcn_verify_report* report, lcn_format format, char* buf,
                                     size_t cap, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
