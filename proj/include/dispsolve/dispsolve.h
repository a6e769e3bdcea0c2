/* C interface of the dispsolve shared library.
 *
 * All matrices are column-major with leading dimension equal to the row
 * count. Complex numbers are passed as dsv_complex pairs. Functions return a
 * dsv_status; on failure dsv_last_error() describes the problem (per thread).
 * Real-valued input takes the all-real code path where one exists. */
#ifndef DISPSOLVE_DISPSOLVE_H
#define DISPSOLVE_DISPSOLVE_H

#include <stddef.h>

#if defined(DISPSOLVE_BUILDING_LIBRARY)
#define DSV_API __attribute__((visibility("default")))
#else
#define DSV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
  double re;
  double im;
} dsv_complex;

typedef enum {
  DSV_OK = 0,
  DSV_INVALID_ARGUMENT = 1,
  DSV_NONRECONSTRUCTABLE = 2,
  DSV_SINGULAR = 3,
  DSV_STRUCTURALLY_SINGULAR = 4,
  DSV_INCOMPATIBLE_PIVOTING = 5,
  DSV_OUT_OF_MEMORY = 6,
  DSV_INTERNAL = 7
} dsv_status;

/* Pivoting codes for dsv_options.piv. */
enum {
  DSV_PIV_NONE = 0,
  DSV_PIV_PARTIAL = 1,
  DSV_PIV_SWEET_BRENT = 2,
  DSV_PIV_GU = 3,
  DSV_PIV_GU_PERIODIC = 4,
  DSV_PIV_COMPLETE = 5
};

/* Values for dsv_options.gathering. */
enum { DSV_GATHER_AUTO = 0, DSV_GATHER_NEVER = 1, DSV_GATHER_ALWAYS = 2 };

typedef struct {
  int piv;             /* 0..5, default 1 */
  int gu_period;       /* refresh period for piv 4, default 10 */
  double collapse_tol; /* merge right knots closer than this, default 0 */
  int gathering;       /* DSV_GATHER_*, default auto */
  int track_growth;    /* record generator growth, default 0 */
} dsv_options;

typedef struct dsv_cauchy dsv_cauchy;
typedef struct dsv_report dsv_report;

DSV_API void dsv_options_init(dsv_options* opts);
DSV_API const char* dsv_version(void);
DSV_API const char* dsv_last_error(void);
DSV_API const char* dsv_status_string(dsv_status status);

/* Cauchy-like matrix C_ij = (G_i . conj(H_j)) / (t_i - s_j), m x n, rank r.
 * g is m x r, h is n x r. */
DSV_API dsv_status dsv_cauchy_create(ptrdiff_t m, ptrdiff_t n, ptrdiff_t r,
                                     const dsv_complex* t, const dsv_complex* s,
                                     const dsv_complex* g, const dsv_complex* h,
                                     dsv_cauchy** out);
DSV_API void dsv_cauchy_destroy(dsv_cauchy* c);
DSV_API ptrdiff_t dsv_cauchy_rows(const dsv_cauchy* c);
DSV_API ptrdiff_t dsv_cauchy_cols(const dsv_cauchy* c);
DSV_API ptrdiff_t dsv_cauchy_rank(const dsv_cauchy* c);
DSV_API int dsv_cauchy_is_real(const dsv_cauchy* c);
/* out: m x n. */
DSV_API dsv_status dsv_cauchy_to_dense(const dsv_cauchy* c, dsv_complex* out);
/* out = C v, v is n x d, out is m x d. */
DSV_API dsv_status dsv_cauchy_multiply(const dsv_cauchy* c, ptrdiff_t d,
                                       const dsv_complex* v, dsv_complex* out);
/* Counts violated invariants; a summary is written to message (truncated,
 * always terminated) when message_len > 0. */
DSV_API dsv_status dsv_cauchy_validate(const dsv_cauchy* c,
                                       ptrdiff_t* issue_count, char* message,
                                       size_t message_len);

/* Solvers. b is n x d. opts may be NULL for defaults. */
DSV_API dsv_status dsv_solve_cauchy_like(const dsv_cauchy* c, ptrdiff_t d,
                                         const dsv_complex* b,
                                         const dsv_options* opts,
                                         dsv_report** out);
/* col, row: first column and first row, col[0] == row[0]. */
DSV_API dsv_status dsv_solve_toeplitz(ptrdiff_t n, const dsv_complex* col,
                                      const dsv_complex* row, ptrdiff_t d,
                                      const dsv_complex* b,
                                      const dsv_options* opts, dsv_report** out);
/* Z_xi A - A Z_eta = G H^*. */
DSV_API dsv_status dsv_solve_toeplitz_like(ptrdiff_t n, ptrdiff_t r,
                                           const dsv_complex* g,
                                           const dsv_complex* h, dsv_complex xi,
                                           dsv_complex eta, ptrdiff_t d,
                                           const dsv_complex* b,
                                           const dsv_options* opts,
                                           dsv_report** out);
/* K_ij = t_{i-j} + h_{i+j}; t holds t_{1-n}..t_{n-1}, h holds h_0..h_{2n-2}. */
DSV_API dsv_status dsv_solve_toeplitz_hankel(ptrdiff_t n, const dsv_complex* t,
                                             const dsv_complex* h, ptrdiff_t d,
                                             const dsv_complex* b,
                                             const dsv_options* opts,
                                             dsv_report** out);
/* Y_0 A - A Y_1 = G H^*. */
DSV_API dsv_status dsv_solve_toeplitz_hankel_like(
    ptrdiff_t n, ptrdiff_t r, const dsv_complex* g, const dsv_complex* h,
    ptrdiff_t d, const dsv_complex* b, const dsv_options* opts,
    dsv_report** out);
/* W_ij = w_i^{n-j}. phi may be NULL to let the library pick it. */
DSV_API dsv_status dsv_solve_vandermonde(ptrdiff_t n, const dsv_complex* w,
                                         const dsv_complex* phi, ptrdiff_t d,
                                         const dsv_complex* b,
                                         const dsv_options* opts,
                                         dsv_report** out);
/* D_w A - A Z_phi^* = G H^*. */
DSV_API dsv_status dsv_solve_vandermonde_like(
    ptrdiff_t n, ptrdiff_t r, const dsv_complex* w, dsv_complex phi,
    const dsv_complex* g, const dsv_complex* h, ptrdiff_t d,
    const dsv_complex* b, const dsv_options* opts, dsv_report** out);

DSV_API void dsv_report_destroy(dsv_report* rep);
DSV_API ptrdiff_t dsv_report_rows(const dsv_report* rep);
DSV_API ptrdiff_t dsv_report_cols(const dsv_report* rep);
/* Copies the rows x cols solution. */
DSV_API void dsv_report_solution(const dsv_report* rep, dsv_complex* out);
DSV_API double dsv_report_rcond(const dsv_report* rep);
DSV_API int dsv_report_ill_conditioned(const dsv_report* rep);
DSV_API int dsv_report_is_real(const dsv_report* rep);
/* Both of length rows. */
DSV_API void dsv_report_row_perm(const dsv_report* rep, ptrdiff_t* out);
DSV_API void dsv_report_col_perm(const dsv_report* rep, ptrdiff_t* out);
/* Returns 1 and writes the phase when a Vandermonde solver chose one. */
DSV_API int dsv_report_phi(const dsv_report* rep, dsv_complex* out);
/* Growth of the left and right generators (1 unless track_growth was set). */
DSV_API void dsv_report_growth(const dsv_report* rep, double* left,
                               double* right);
/* Per-step max |entry| of the live generators; either pointer may be NULL.
 * Returns the number of steps recorded. */
DSV_API ptrdiff_t dsv_report_trace(const dsv_report* rep, double* left,
                                   double* right);

/* Dense reference computations (O(n^3)). */
DSV_API dsv_status dsv_dense_solve(ptrdiff_t n, const dsv_complex* a,
                                   ptrdiff_t d, const dsv_complex* b,
                                   dsv_complex* x);
DSV_API dsv_status dsv_dense_cond1(ptrdiff_t n, const dsv_complex* a,
                                   double* out);
DSV_API dsv_status dsv_toeplitz_dense(ptrdiff_t n, const dsv_complex* col,
                                      const dsv_complex* row, dsv_complex* out);
DSV_API dsv_status dsv_toeplitz_hankel_dense(ptrdiff_t n, const dsv_complex* t,
                                             const dsv_complex* h,
                                             dsv_complex* out);
DSV_API dsv_status dsv_vandermonde_dense(ptrdiff_t n, const dsv_complex* w,
                                         dsv_complex* out);

/* Entries within tol of an earlier entry take that entry's collapsed value. */
DSV_API dsv_status dsv_collapse_knots(ptrdiff_t n, const dsv_complex* s,
                                      double tol, dsv_complex* out);

#ifdef __cplusplus
}
#endif

#endif
