#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

// Shared numeric primitives. All of them accept any dense Eigen expression.

namespace anece {

/// Default relative tolerance for numerical_rank: max(rows, cols) * 1e-12.
template <typename Derived>
double default_rank_rtol(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<double>(std::max(m.rows(), m.cols())) * 1e-12;
}

/// Number of singular values above rtol * sigma_max. A negative rtol selects
/// the default.
template <typename Derived>
int numerical_rank(const Eigen::MatrixBase<Derived>& m, double rtol = -1.0) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (rtol < 0.0) rtol = default_rank_rtol(m);
  using Plain = typename Derived::PlainObject;
  const Eigen::JacobiSVD<Plain> svd(m.eval());
  const auto& s = svd.singularValues();
  const double smax = s(0);
  if (!(smax > 0.0)) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > rtol * smax) ++rank;
  }
  return rank;
}

/// log2 |m| for Hermitian positive-definite m, via Cholesky. Only the lower
/// triangle is read.
template <typename Derived>
double logdet_hpd(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("logdet_hpd: matrix is not square");
  using Plain = typename Derived::PlainObject;
  const Eigen::LLT<Plain> llt(m.eval());
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("logdet_hpd: matrix is not positive definite");
  }
  const auto& l = llt.matrixLLT();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < l.rows(); ++k) {
    const double d = std::real(l(k, k));
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw std::domain_error("logdet_hpd: non-positive pivot");
    }
    acc += std::log2(d);
  }
  return 2.0 * acc;
}

inline constexpr double kDefaultPowerRatio = 1024.0;  // 2^10
inline constexpr double kDefaultGrowthFraction = 0.1;

/// Counts eigenvalues that scale with sigma^2.
///
/// r_lo and r_hi are the same Hermitian covariance evaluated at sigma^2_lo and
/// at power_ratio * sigma^2_lo. Sorted eigenvalues are paired in order; an
/// eigenvalue of the form eta*sigma^2 + a grows by roughly power_ratio while a
/// bounded one stays put, so the count of ratios above
/// growth_fraction * power_ratio is the log-determinant DoF.
template <typename DerivedLo, typename DerivedHi>
int eig_growth_count(const Eigen::MatrixBase<DerivedLo>& r_lo,
                     const Eigen::MatrixBase<DerivedHi>& r_hi,
                     double power_ratio = kDefaultPowerRatio,
                     double growth_fraction = kDefaultGrowthFraction) {
  if (r_lo.rows() != r_lo.cols() || r_hi.rows() != r_hi.cols() || r_lo.rows() != r_hi.rows()) {
    throw std::invalid_argument("eig_growth_count: dimension mismatch");
  }
  using PlainLo = typename DerivedLo::PlainObject;
  using PlainHi = typename DerivedHi::PlainObject;
  const Eigen::SelfAdjointEigenSolver<PlainLo> lo(r_lo.eval(), Eigen::EigenvaluesOnly);
  const Eigen::SelfAdjointEigenSolver<PlainHi> hi(r_hi.eval(), Eigen::EigenvaluesOnly);
  if (lo.info() != Eigen::Success || hi.info() != Eigen::Success) {
    throw std::runtime_error("eig_growth_count: eigen decomposition failed");
  }
  const double threshold = growth_fraction * power_ratio;
  int count = 0;
  for (Eigen::Index k = 0; k < r_lo.rows(); ++k) {
    const double a = lo.eigenvalues()(k);
    const double b = hi.eigenvalues()(k);
    if (a > 0.0 && b / a > threshold) ++count;
  }
  return count;
}

/// Block-diagonal stack of two matrices.
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject block_diag(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  typename DerivedA::PlainObject out =
      DerivedA::PlainObject::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// Kronecker product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject kron(const Eigen::MatrixBase<DerivedA>& a,
                                    const Eigen::MatrixBase<DerivedB>& b) {
  typename DerivedA::PlainObject out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

}  // namespace anece
