#include "dispsolve/dispsolve.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "dispsolve/oracle.hpp"
#include "dispsolve/solvers.hpp"

using namespace dispsolve;

struct dsv_cauchy {
  std::variant<CauchyLike<double>, CauchyLike<cplx>> c;
};

struct dsv_report {
  SolveReport<cplx> rep;
  bool real = false;
};

namespace {

thread_local std::string g_last_error;

dsv_status fail(dsv_status s, const char* what) {
  g_last_error = what;
  return s;
}

dsv_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return DSV_INVALID_ARGUMENT;
    case ErrorCode::nonreconstructable:
      return DSV_NONRECONSTRUCTABLE;
    case ErrorCode::singular:
      return DSV_SINGULAR;
    case ErrorCode::structurally_singular:
      return DSV_STRUCTURALLY_SINGULAR;
    case ErrorCode::incompatible_pivoting:
      return DSV_INCOMPATIBLE_PIVOTING;
  }
  return DSV_INTERNAL;
}

template <class F>
dsv_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return DSV_OK;
  } catch (const Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DSV_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(DSV_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

void require_data(const void* p, ptrdiff_t count, const char* name) {
  if (count > 0 && p == nullptr)
    throw Error(ErrorCode::invalid_argument, std::string(name) + ": null pointer");
}

cplx to_cplx(dsv_complex z) { return {z.re, z.im}; }
dsv_complex from_cplx(cplx z) { return {z.real(), z.imag()}; }

CMatrix read(const dsv_complex* p, ptrdiff_t rows, ptrdiff_t cols,
             const char* name) {
  require(rows >= 0 && cols >= 0, "negative dimension");
  require_data(p, rows * cols, name);
  CMatrix m(rows, cols);
  for (ptrdiff_t j = 0; j < cols; ++j)
    for (ptrdiff_t i = 0; i < rows; ++i) m(i, j) = to_cplx(p[i + j * rows]);
  return m;
}

CVector read_vec(const dsv_complex* p, ptrdiff_t n, const char* name) {
  return read(p, n, 1, name).col(0);
}

template <class Derived>
void write(const Eigen::MatrixBase<Derived>& m, dsv_complex* out) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      out[i + j * m.rows()] = from_cplx(cplx(m(i, j)));
}

bool is_real(const CMatrix& m) {
  for (Index k = 0; k < m.size(); ++k)
    if (m.data()[k].imag() != 0.0) return false;
  return true;
}

SolveOptions to_options(const dsv_options* o) {
  dsv_options d;
  dsv_options_init(&d);
  if (!o) o = &d;
  SolveOptions opt;
  opt.pivot = PivotStrategy::from_code(o->piv, o->gu_period);
  switch (o->gathering) {
    case DSV_GATHER_AUTO:
      opt.gathering = Gathering::automatic;
      break;
    case DSV_GATHER_NEVER:
      opt.gathering = Gathering::never;
      break;
    case DSV_GATHER_ALWAYS:
      opt.gathering = Gathering::always;
      break;
    default:
      throw Error(ErrorCode::invalid_argument, "gathering: unknown mode");
  }
  opt.track_growth = o->track_growth != 0;
  return opt;
}

double collapse_tol(const dsv_options* o) {
  if (!o) return 0.0;
  require(o->collapse_tol >= 0, "collapse_tol must be >= 0");
  return o->collapse_tol;
}

dsv_report* make_report(SolveReport<cplx> rep, bool real) {
  return new dsv_report{std::move(rep), real};
}

dsv_report* make_report(SolveReport<double> r) {
  SolveReport<cplx> c;
  c.x = r.x.cast<cplx>();
  c.rcond_u = r.rcond_u;
  c.ill_conditioned = r.ill_conditioned;
  c.row_perm = std::move(r.row_perm);
  c.col_perm = std::move(r.col_perm);
  c.gu_refreshes = r.gu_refreshes;
  c.gu_skipped = r.gu_skipped;
  c.growth_g = r.growth_g;
  c.growth_h = r.growth_h;
  c.trace_g = std::move(r.trace_g);
  c.trace_h = std::move(r.trace_h);
  c.phi = r.phi;
  return new dsv_report{std::move(c), true};
}

template <class Scalar>
CauchyLike<Scalar> with_collapsed(const CauchyLike<Scalar>& c, double tol) {
  if (tol == 0) return c;
  return CauchyLike<Scalar>(c.t(), collapse_knots(c.s(), tol), c.g(), c.h());
}

}  // namespace

extern "C" {

void dsv_options_init(dsv_options* opts) {
  if (!opts) return;
  opts->piv = DSV_PIV_PARTIAL;
  opts->gu_period = 10;
  opts->collapse_tol = 0.0;
  opts->gathering = DSV_GATHER_AUTO;
  opts->track_growth = 0;
}

const char* dsv_version(void) { return DISPSOLVE_VERSION_STRING; }

const char* dsv_last_error(void) { return g_last_error.c_str(); }

const char* dsv_status_string(dsv_status status) {
  switch (status) {
    case DSV_OK:
      return "ok";
    case DSV_INVALID_ARGUMENT:
      return "invalid argument";
    case DSV_NONRECONSTRUCTABLE:
      return "nonreconstructable entry";
    case DSV_SINGULAR:
      return "singular matrix";
    case DSV_STRUCTURALLY_SINGULAR:
      return "structurally singular";
    case DSV_INCOMPATIBLE_PIVOTING:
      return "pivoting incompatible with repeated knots";
    case DSV_OUT_OF_MEMORY:
      return "out of memory";
    case DSV_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

dsv_status dsv_cauchy_create(ptrdiff_t m, ptrdiff_t n, ptrdiff_t r,
                             const dsv_complex* t, const dsv_complex* s,
                             const dsv_complex* g, const dsv_complex* h,
                             dsv_cauchy** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    require(m >= 0 && n >= 0 && r >= 1, "dimensions: need m, n >= 0 and r >= 1");
    CVector tv = read_vec(t, m, "t"), sv = read_vec(s, n, "s");
    CMatrix gm = read(g, m, r, "G"), hm = read(h, n, r, "H");
    if (is_real(tv) && is_real(sv) && is_real(gm) && is_real(hm)) {
      *out = new dsv_cauchy{CauchyLike<double>(tv.real(), sv.real(), gm.real(),
                                               hm.real())};
    } else {
      *out = new dsv_cauchy{CauchyLike<cplx>(std::move(tv), std::move(sv),
                                             std::move(gm), std::move(hm))};
    }
  });
}

void dsv_cauchy_destroy(dsv_cauchy* c) { delete c; }

ptrdiff_t dsv_cauchy_rows(const dsv_cauchy* c) {
  return std::visit([](const auto& x) { return ptrdiff_t(x.rows()); }, c->c);
}
ptrdiff_t dsv_cauchy_cols(const dsv_cauchy* c) {
  return std::visit([](const auto& x) { return ptrdiff_t(x.cols()); }, c->c);
}
ptrdiff_t dsv_cauchy_rank(const dsv_cauchy* c) {
  return std::visit([](const auto& x) { return ptrdiff_t(x.rank()); }, c->c);
}
int dsv_cauchy_is_real(const dsv_cauchy* c) { return c->c.index() == 0; }

dsv_status dsv_cauchy_to_dense(const dsv_cauchy* c, dsv_complex* out) {
  return guarded([&] {
    require(c != nullptr, "matrix: null handle");
    std::visit(
        [&](const auto& x) {
          require_data(out, x.rows() * x.cols(), "out");
          write(to_dense(x), out);
        },
        c->c);
  });
}

dsv_status dsv_cauchy_multiply(const dsv_cauchy* c, ptrdiff_t d,
                               const dsv_complex* v, dsv_complex* out) {
  return guarded([&] {
    require(c != nullptr, "matrix: null handle");
    const CMatrix vm = read(v, dsv_cauchy_cols(c), d, "v");
    require_data(out, dsv_cauchy_rows(c) * d, "out");
    if (const auto* re = std::get_if<CauchyLike<double>>(&c->c)) {
      if (is_real(vm)) {
        write(multiply(*re, RMatrix(vm.real())), out);
        return;
      }
      const CauchyLike<cplx> promoted(re->t().cast<cplx>(), re->s().cast<cplx>(),
                                      re->g().cast<cplx>(), re->h().cast<cplx>());
      write(multiply(promoted, vm), out);
      return;
    }
    write(multiply(std::get<CauchyLike<cplx>>(c->c), vm), out);
  });
}

dsv_status dsv_cauchy_validate(const dsv_cauchy* c, ptrdiff_t* issue_count,
                               char* message, size_t message_len) {
  return guarded([&] {
    require(c != nullptr, "matrix: null handle");
    const Diagnostics diag =
        std::visit([](const auto& x) { return validate(x); }, c->c);
    if (issue_count) *issue_count = ptrdiff_t(diag.issues.size());
    if (message && message_len > 0) {
      const std::string s = diag.summary();
      const size_t k = std::min(s.size(), message_len - 1);
      std::memcpy(message, s.data(), k);
      message[k] = '\0';
    }
  });
}

dsv_status dsv_solve_cauchy_like(const dsv_cauchy* c, ptrdiff_t d,
                                 const dsv_complex* b, const dsv_options* opts,
                                 dsv_report** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "null handle");
    const SolveOptions opt = to_options(opts);
    const double tol = collapse_tol(opts);
    const CMatrix bm = read(b, dsv_cauchy_rows(c), d, "rhs");
    if (const auto* re = std::get_if<CauchyLike<double>>(&c->c)) {
      if (is_real(bm)) {
        *out = make_report(
            solve_cauchy_like(with_collapsed(*re, tol), RMatrix(bm.real()), opt));
        return;
      }
      const CauchyLike<cplx> promoted(re->t().cast<cplx>(), re->s().cast<cplx>(),
                                      re->g().cast<cplx>(), re->h().cast<cplx>());
      *out = make_report(solve_cauchy_like(with_collapsed(promoted, tol), bm, opt),
                         false);
      return;
    }
    *out = make_report(
        solve_cauchy_like(with_collapsed(std::get<CauchyLike<cplx>>(c->c), tol),
                          bm, opt),
        false);
  });
}

dsv_status dsv_solve_toeplitz(ptrdiff_t n, const dsv_complex* col,
                              const dsv_complex* row, ptrdiff_t d,
                              const dsv_complex* b, const dsv_options* opts,
                              dsv_report** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    const SolveOptions opt = to_options(opts);
    const Toeplitz<cplx> t(read_vec(col, n, "col"), read_vec(row, n, "row"));
    *out = make_report(solve_toeplitz(t, read(b, n, d, "rhs"), opt), false);
  });
}

dsv_status dsv_solve_toeplitz_like(ptrdiff_t n, ptrdiff_t r, const dsv_complex* g,
                                   const dsv_complex* h, dsv_complex xi,
                                   dsv_complex eta, ptrdiff_t d,
                                   const dsv_complex* b, const dsv_options* opts,
                                   dsv_report** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    require(r >= 1, "r must be >= 1");
    const SolveOptions opt = to_options(opts);
    const ToeplitzLike a(read(g, n, r, "G"), read(h, n, r, "H"), to_cplx(xi),
                         to_cplx(eta));
    *out = make_report(solve_toeplitz_like(a, read(b, n, d, "rhs"), opt), false);
  });
}

dsv_status dsv_solve_toeplitz_hankel(ptrdiff_t n, const dsv_complex* t,
                                     const dsv_complex* h, ptrdiff_t d,
                                     const dsv_complex* b,
                                     const dsv_options* opts, dsv_report** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    require(n >= 1, "n must be >= 1");
    const SolveOptions opt = to_options(opts);
    const CVector tv = read_vec(t, 2 * n - 1, "t");
    const CVector hv = read_vec(h, 2 * n - 1, "h");
    const CMatrix bm = read(b, n, d, "rhs");
    if (is_real(tv) && is_real(hv) && is_real(bm)) {
      const ToeplitzHankel<double> k(tv.real(), hv.real());
      *out = make_report(solve_toeplitz_hankel(k, RMatrix(bm.real()), opt));
    } else {
      const ToeplitzHankel<cplx> k(tv, hv);
      *out = make_report(solve_toeplitz_hankel(k, bm, opt), false);
    }
  });
}

dsv_status dsv_solve_toeplitz_hankel_like(ptrdiff_t n, ptrdiff_t r,
                                          const dsv_complex* g,
                                          const dsv_complex* h, ptrdiff_t d,
                                          const dsv_complex* b,
                                          const dsv_options* opts,
                                          dsv_report** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    require(r >= 1, "r must be >= 1");
    const SolveOptions opt = to_options(opts);
    const CMatrix gm = read(g, n, r, "G"), hm = read(h, n, r, "H");
    const CMatrix bm = read(b, n, d, "rhs");
    if (is_real(gm) && is_real(hm) && is_real(bm)) {
      const ToeplitzHankelLike<double> a(gm.real(), hm.real());
      *out = make_report(solve_toeplitz_hankel_like(a, RMatrix(bm.real()), opt));
    } else {
      const ToeplitzHankelLike<cplx> a(gm, hm);
      *out = make_report(solve_toeplitz_hankel_like(a, bm, opt), false);
    }
  });
}

dsv_status dsv_solve_vandermonde(ptrdiff_t n, const dsv_complex* w,
                                 const dsv_complex* phi, ptrdiff_t d,
                                 const dsv_complex* b, const dsv_options* opts,
                                 dsv_report** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    const SolveOptions opt = to_options(opts);
    std::optional<cplx> p;
    if (phi) p = to_cplx(*phi);
    *out = make_report(
        solve_vandermonde(Vandermonde(read_vec(w, n, "w")), read(b, n, d, "rhs"),
                          opt, p),
        false);
  });
}

dsv_status dsv_solve_vandermonde_like(ptrdiff_t n, ptrdiff_t r,
                                      const dsv_complex* w, dsv_complex phi,
                                      const dsv_complex* g, const dsv_complex* h,
                                      ptrdiff_t d, const dsv_complex* b,
                                      const dsv_options* opts, dsv_report** out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    require(r >= 1, "r must be >= 1");
    const SolveOptions opt = to_options(opts);
    const VandermondeLike a(read_vec(w, n, "w"), to_cplx(phi), read(g, n, r, "G"),
                            read(h, n, r, "H"));
    *out = make_report(solve_vandermonde_like(a, read(b, n, d, "rhs"), opt),
                       false);
  });
}

void dsv_report_destroy(dsv_report* rep) { delete rep; }
ptrdiff_t dsv_report_rows(const dsv_report* rep) { return rep->rep.x.rows(); }
ptrdiff_t dsv_report_cols(const dsv_report* rep) { return rep->rep.x.cols(); }
void dsv_report_solution(const dsv_report* rep, dsv_complex* out) {
  write(rep->rep.x, out);
}
double dsv_report_rcond(const dsv_report* rep) { return rep->rep.rcond_u; }
int dsv_report_ill_conditioned(const dsv_report* rep) {
  return rep->rep.ill_conditioned;
}
int dsv_report_is_real(const dsv_report* rep) { return rep->real; }
void dsv_report_row_perm(const dsv_report* rep, ptrdiff_t* out) {
  std::copy(rep->rep.row_perm.begin(), rep->rep.row_perm.end(), out);
}
void dsv_report_col_perm(const dsv_report* rep, ptrdiff_t* out) {
  std::copy(rep->rep.col_perm.begin(), rep->rep.col_perm.end(), out);
}
int dsv_report_phi(const dsv_report* rep, dsv_complex* out) {
  if (!rep->rep.phi) return 0;
  if (out) *out = from_cplx(*rep->rep.phi);
  return 1;
}
void dsv_report_growth(const dsv_report* rep, double* left, double* right) {
  if (left) *left = rep->rep.growth_g;
  if (right) *right = rep->rep.growth_h;
}
ptrdiff_t dsv_report_trace(const dsv_report* rep, double* left, double* right) {
  if (left) std::copy(rep->rep.trace_g.begin(), rep->rep.trace_g.end(), left);
  if (right) std::copy(rep->rep.trace_h.begin(), rep->rep.trace_h.end(), right);
  return ptrdiff_t(rep->rep.trace_g.size());
}

dsv_status dsv_dense_solve(ptrdiff_t n, const dsv_complex* a, ptrdiff_t d,
                           const dsv_complex* b, dsv_complex* x) {
  return guarded([&] {
    const CMatrix am = read(a, n, n, "A"), bm = read(b, n, d, "rhs");
    require_data(x, n * d, "x");
    if (is_real(am) && is_real(bm))
      write(oracle::dense_solve(RMatrix(am.real()), RMatrix(bm.real())), x);
    else
      write(oracle::dense_solve(am, bm), x);
  });
}

dsv_status dsv_dense_cond1(ptrdiff_t n, const dsv_complex* a, double* out) {
  return guarded([&] {
    require(out != nullptr, "out: null pointer");
    const CMatrix am = read(a, n, n, "A");
    *out = is_real(am) ? oracle::dense_cond1(RMatrix(am.real()))
                       : oracle::dense_cond1(am);
  });
}

dsv_status dsv_toeplitz_dense(ptrdiff_t n, const dsv_complex* col,
                              const dsv_complex* row, dsv_complex* out) {
  return guarded([&] {
    const Toeplitz<cplx> t(read_vec(col, n, "col"), read_vec(row, n, "row"));
    require_data(out, n * n, "out");
    write(oracle::toeplitz_matrix(t), out);
  });
}

dsv_status dsv_toeplitz_hankel_dense(ptrdiff_t n, const dsv_complex* t,
                                     const dsv_complex* h, dsv_complex* out) {
  return guarded([&] {
    require(n >= 1, "n must be >= 1");
    const ToeplitzHankel<cplx> k(read_vec(t, 2 * n - 1, "t"),
                                 read_vec(h, 2 * n - 1, "h"));
    require_data(out, n * n, "out");
    write(oracle::toeplitz_hankel_matrix(k), out);
  });
}

dsv_status dsv_vandermonde_dense(ptrdiff_t n, const dsv_complex* w,
                                 dsv_complex* out) {
  return guarded([&] {
    const CVector wv = read_vec(w, n, "w");
    require_data(out, n * n, "out");
    write(oracle::vandermonde_matrix(wv), out);
  });
}

dsv_status dsv_collapse_knots(ptrdiff_t n, const dsv_complex* s, double tol,
                              dsv_complex* out) {
  return guarded([&] {
    const CVector sv = read_vec(s, n, "s");
    require_data(out, n, "out");
    write(collapse_knots(sv, tol), out);
  });
}

}  // extern "C"
