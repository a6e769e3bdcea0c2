#include "dispsolve/schur_engine.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace dispsolve::detail {

namespace {

// Diagonal entries of the R factor at or below this magnitude make the Gu
// refresh pointless; the step is skipped.
constexpr double kTinyRDiagonal = 1e-300;

// |z|^2 without the overflow guards of std::abs.
inline double squared(double z) { return z * z; }
inline double squared(cplx z) { return std::norm(z); }

inline double magnitude(double z) { return std::abs(z); }
inline double magnitude(cplx z) { return std::sqrt(std::norm(z)); }

// 1 / z through one real division; falls back to the library division when
// |z|^2 leaves the normal range.
inline double reciprocal(double z) { return 1.0 / z; }
inline cplx reciprocal(cplx z) {
  const double nz = std::norm(z);
  if (nz > 1e-300 && nz < 1e300) return std::conj(z) * (1.0 / nz);
  return cplx(1.0) / z;
}

template <class Derived>
Index argmax_abs(const Eigen::MatrixBase<Derived>& v, double* value) {
  Index best = 0;
  double m = -1;
  for (Index i = 0; i < v.size(); ++i) {
    const double a = squared(v[i]);
    if (a > m) {
      m = a;
      best = i;
    }
  }
  if (m > 0 && std::isfinite(m)) {
    *value = std::sqrt(m);
    return best;
  }
  // Squares under- or overflowed: redo the scan with the exact modulus.
  m = -1;
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > m) {
      m = a;
      best = i;
    }
  }
  *value = m < 0 ? 0.0 : m;
  return best;
}

}  // namespace

template <class Scalar>
SchurEngine<Scalar>::SchurEngine(const CauchyLike<Scalar>& c,
                                 const Matrix<Scalar>& b,
                                 const GatherPlan* plan)
    : n_(c.rows()),
      r_(c.rank()),
      d_(b.cols()),
      t_(c.t()),
      g_(c.g()),
      b_(b),
      ell_(Vector<Scalar>::Zero(c.rows())),
      u_(Vector<Scalar>::Zero(c.rows())),
      tmp_r_(c.rank()),
      tmp_d_(b.cols()),
      plan_(plan),
      row_perm_(static_cast<std::size_t>(c.rows())),
      u_colsum_(RVector::Zero(c.rows())) {
  if (!c.square())
    throw Error(ErrorCode::invalid_argument, "solve: matrix is not square");
  if (b.rows() != n_)
    throw Error(ErrorCode::invalid_argument,
                "rhs: row count does not match the matrix size");
  std::iota(row_perm_.begin(), row_perm_.end(), Index(0));
  s_.resize(n_);
  hs_.resize(r_, n_);
  if (plan_) {
    col_perm_ = plan_->perm;
    for (Index k = 0; k < n_; ++k) {
      s_[k] = c.s()[col_perm_[k]];
      hs_.col(k) = c.h().row(col_perm_[k]).adjoint();
    }
  } else {
    col_perm_.resize(static_cast<std::size_t>(n_));
    std::iota(col_perm_.begin(), col_perm_.end(), Index(0));
    s_ = c.s();
    hs_ = c.h().adjoint();
  }
}

template <class Scalar>
Scalar SchurEngine<Scalar>::dot_row_col(Index i, Index j) const {
  Scalar acc(0);
  for (Index c = 0; c < r_; ++c) acc += g_(i, c) * hs_(c, j);
  return acc;
}

template <class Scalar>
void SchurEngine<Scalar>::collision(Index i, Index j) const {
  std::ostringstream os;
  os << "nonreconstructable entry (" << row_perm_[i] << ", " << col_perm_[j]
     << "): t_i == s_j";
  throw Error(ErrorCode::nonreconstructable, os.str());
}

template <class Scalar>
void SchurEngine<Scalar>::singular(Index k) const {
  std::ostringstream os;
  os << "singular matrix: zero pivot at step " << k;
  throw Error(ErrorCode::singular, os.str());
}

template <class Scalar>
Scalar SchurEngine<Scalar>::live_entry(Index i, Index j) const {
  const Scalar den = t_[i] - s_[j];
  if (den == Scalar(0)) collision(i, j);
  return dot_row_col(i, j) / den;
}

template <class Scalar>
void SchurEngine<Scalar>::load_lower(Index k) {
  const Index m = n_ - k;
  ell_.segment(k, m).noalias() = g_.bottomRows(m) * hs_.col(k);
  const Scalar sk = s_[k];
  for (Index i = k; i < n_; ++i) {
    const Scalar den = t_[i] - sk;
    if (den == Scalar(0)) collision(i, k);
    ell_[i] *= reciprocal(den);
  }
}

template <class Scalar>
void SchurEngine<Scalar>::load_upper(Index k) {
  const Index a = plan_ ? plan_->alpha[k] : k;
  if (a > 0) {
    ell_.head(a).noalias() = g_.topRows(a) * hs_.col(k);
    const Scalar sk = s_[k];
    for (Index i = 0; i < a; ++i) {
      const Scalar den = s_[i] - sk;
      if (den == Scalar(0))
        throw Error(ErrorCode::invalid_argument,
                    "repeated right knots reached the plain elimination path");
      ell_[i] *= reciprocal(den);
    }
  }
  // Stored entries of the nonreconstructable block.
  for (Index i = a; i < k; ++i) ell_[i] = hs_(k - a - 1, i);
}

template <class Scalar>
void SchurEngine<Scalar>::load_row(Index k) {
  const Index m = n_ - k - 1;
  if (m <= 0) return;
  tmp_r_ = g_.row(k).transpose();
  u_.tail(m).noalias() = hs_.rightCols(m).transpose() * tmp_r_;
  const Scalar tk = t_[k];
  for (Index j = k + 1; j < n_; ++j) {
    const Scalar den = tk - s_[j];
    if (den == Scalar(0)) collision(k, j);
    u_[j] *= reciprocal(den);
  }
}

template <class Scalar>
void SchurEngine<Scalar>::swap_rows(Index k, Index i) {
  if (i == k) return;
  g_.row(k).swap(g_.row(i));
  b_.row(k).swap(b_.row(i));
  std::swap(t_[k], t_[i]);
  std::swap(ell_[k], ell_[i]);
  std::swap(row_perm_[k], row_perm_[i]);
}

template <class Scalar>
void SchurEngine<Scalar>::swap_cols(Index k, Index j) {
  if (j == k) return;
  hs_.col(k).swap(hs_.col(j));
  std::swap(s_[k], s_[j]);
  std::swap(col_perm_[k], col_perm_[j]);
  std::swap(u_colsum_[k], u_colsum_[j]);
}

template <class Scalar>
void SchurEngine<Scalar>::eliminate(Index k) {
  const Scalar d = ell_[k];
  if (d == Scalar(0)) singular(k);
  const double dabs = std::abs(d);

  // Column k of U^{-1} is (-ell_{0:k-1}, 1) / d; row k of U is (d, u).
  double inv_col = 1.0;
  for (Index i = 0; i < k; ++i) inv_col += magnitude(ell_[i]);
  uinv_norm_ = std::max(uinv_norm_, inv_col / dabs);
  u_colsum_[k] += dabs;
  for (Index j = k + 1; j < n_; ++j) u_colsum_[j] += magnitude(u_[j]);

  ell_[k] = Scalar(-1);

  tmp_r_ = g_.row(k).transpose() / d;
  g_.row(k).setZero();
  g_.noalias() -= ell_ * tmp_r_.transpose();

  if (d_ > 0) {
    tmp_d_ = b_.row(k).transpose() / d;
    b_.row(k).setZero();
    b_.noalias() -= ell_ * tmp_d_.transpose();
  }

  const Index m = n_ - k - 1;
  tmp_r_ = hs_.col(k) / d;
  if (m > 0) hs_.rightCols(m).noalias() -= tmp_r_ * u_.tail(m).transpose();

  if (plan_) {
    const Index a = plan_->alpha[k];
    const Index w = plan_->omega[k];
    if (k < w) {
      for (Index j = k + 1; j <= w; ++j) hs_(j - a - 1, k) = Scalar(0);
      for (Index j = k + 1; j <= w; ++j) {
        const Scalar f = u_[j] / d;
        for (Index i = a; i <= k; ++i) hs_(j - a - 1, i) -= ell_[i] * f;
      }
    }
  }
}

template <class Scalar>
bool SchurEngine<Scalar>::gu_refresh(Index k) {
  const Index m = n_ - k;
  if (m < r_) return false;
  Eigen::HouseholderQR<Matrix<Scalar>> qr(g_.bottomRows(m));
  Matrix<Scalar> rf =
      qr.matrixQR().topRows(r_).template triangularView<Eigen::Upper>();
  for (Index j = 0; j < r_; ++j) {
    if (std::abs(rf(j, j)) <= kTinyRDiagonal) {
      ++gu_skipped_;
      return false;
    }
  }
  if (k > 0) {
    auto top = g_.topRows(k);
    rf.template triangularView<Eigen::Upper>()
        .template solveInPlace<Eigen::OnTheRight>(top);
  }
  g_.bottomRows(m) = qr.householderQ() * Matrix<Scalar>::Identity(m, r_);
  Matrix<Scalar> live = rf.template triangularView<Eigen::Upper>() * hs_.rightCols(m);
  hs_.rightCols(m) = live;

  Index best = k;
  double bestnorm = -1;
  for (Index j = k; j < n_; ++j) {
    const double nj = hs_.col(j).squaredNorm();
    if (nj > bestnorm) {
      bestnorm = nj;
      best = j;
    }
  }
  swap_cols(k, best);
  ++gu_refreshes_;
  return true;
}

template <class Scalar>
void SchurEngine<Scalar>::step(Index k, const PivotStrategy& pivot) {
  if (k != k_) throw Error(ErrorCode::invalid_argument, "step out of order");
  double p1 = 0, p2 = 0;
  switch (pivot.code) {
    case Pivoting::none:
      load_lower(k);
      break;

    case Pivoting::gu:
    case Pivoting::gu_periodic:
      if (k % pivot.refresh_period() == 0) gu_refresh(k);
      [[fallthrough]];
    case Pivoting::partial: {
      load_lower(k);
      const Index i = k + argmax_abs(ell_.segment(k, n_ - k), &p1);
      if (p1 == 0) singular(k);
      swap_rows(k, i);
      break;
    }

    case Pivoting::sweet_brent: {
      load_lower(k);
      load_row(k);
      const Index i1 = k + argmax_abs(ell_.segment(k, n_ - k), &p1);
      Index i2 = k;
      if (k + 1 < n_) i2 = k + 1 + argmax_abs(u_.tail(n_ - k - 1), &p2);
      if (p1 == 0 && p2 == 0) singular(k);
      if (p2 > p1) {
        swap_cols(k, i2);
        u_[i2] = ell_[k];
        load_lower(k);
      } else if (i1 > k) {
        swap_rows(k, i1);
        load_row(k);
      }
      load_upper(k);
      eliminate(k);
      ++k_;
      return;
    }

    case Pivoting::complete: {
      const Index m = n_ - k;
      double best = -1;
      Index bi = k, bj = k;
      for (Index j = k; j < n_; ++j) {
        auto v = u_.segment(k, m);
        v.noalias() = g_.bottomRows(m) * hs_.col(j);
        for (Index i = k; i < n_; ++i) {
          const Scalar den = t_[i] - s_[j];
          if (den == Scalar(0)) collision(i, j);
          const double a = magnitude(u_[i]) / magnitude(den);
          if (a > best) {
            best = a;
            bi = i;
            bj = j;
          }
        }
      }
      if (best <= 0) singular(k);
      swap_rows(k, bi);
      swap_cols(k, bj);
      load_lower(k);
      break;
    }
  }
  load_upper(k);
  load_row(k);
  eliminate(k);
  ++k_;
}

template <class Scalar>
void SchurEngine<Scalar>::record_growth(Index k) {
  trace_g_.push_back(abs_max(g_));
  const Index m = n_ - k - 1;
  trace_h_.push_back(m > 0 ? abs_max(hs_.rightCols(m)) : 0.0);
}

template <class Scalar>
void SchurEngine<Scalar>::run(const SolveOptions& options) {
  track_growth_ = options.track_growth;
  if (track_growth_) {
    g0_ = abs_max(g_);
    h0_ = abs_max(hs_);
    trace_g_.reserve(static_cast<std::size_t>(n_));
    trace_h_.reserve(static_cast<std::size_t>(n_));
  }
  for (Index k = k_; k < n_; ++k) {
    step(k, options.pivot);
    if (track_growth_) record_growth(k);
  }
}

template <class Scalar>
SolveReport<Scalar> SchurEngine<Scalar>::finish() {
  SolveReport<Scalar> rep;
  rep.x.resize(n_, d_);
  for (Index k = 0; k < n_; ++k) rep.x.row(col_perm_[k]) = b_.row(k);
  if (n_ > 0) {
    const double unorm = u_colsum_.maxCoeff();
    const double prod = unorm * uinv_norm_;
    rep.rcond_u = (prod > 0 && std::isfinite(prod)) ? 1.0 / prod : 0.0;
  }
  rep.ill_conditioned = rep.rcond_u < kMachineEps;
  rep.row_perm = row_perm_;
  rep.col_perm = col_perm_;
  rep.gu_refreshes = gu_refreshes_;
  rep.gu_skipped = gu_skipped_;
  if (track_growth_) {
    double mg = g0_, mh = h0_;
    for (double v : trace_g_) mg = std::max(mg, v);
    for (double v : trace_h_) mh = std::max(mh, v);
    rep.growth_g = g0_ > 0 ? mg / g0_ : 1.0;
    rep.growth_h = h0_ > 0 ? mh / h0_ : 1.0;
    rep.trace_g = trace_g_;
    rep.trace_h = trace_h_;
  }
  return rep;
}

template class SchurEngine<double>;
template class SchurEngine<cplx>;

}  // namespace dispsolve::detail
