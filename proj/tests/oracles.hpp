#pragma once

// Reference computations used only by the tests. They take a different
// numerical route from the library on purpose.

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "anece/channel.hpp"

namespace oracle {

using anece::CMatrix;
using anece::Index;

// log2 |det m| through LU.
inline double logdet_lu(const CMatrix& m) {
  const Eigen::PartialPivLU<CMatrix> lu(m);
  double acc = 0.0;
  for (Index k = 0; k < m.rows(); ++k) acc += std::log2(std::abs(lu.matrixLU()(k, k)));
  return acc;
}

inline double logdet_i_plus(const CMatrix& g, double sigma2) {
  return logdet_lu(sigma2 * g * g.adjoint() + CMatrix::Identity(g.rows(), g.rows()));
}

// I(sigma*A*h + w; sigma*B*h + w') for white h.
inline double linear_mi(const CMatrix& a, const CMatrix& b, double sigma2) {
  CMatrix g(a.rows() + b.rows(), a.cols());
  g << a, b;
  return logdet_i_plus(a, sigma2) + logdet_i_plus(b, sigma2) - logdet_i_plus(g, sigma2);
}

inline anece::ChannelRealization zero_channels(anece::ChannelRealization ch) {
  for (auto& [k, h] : ch.user_channels) h.setZero();
  for (auto& h : ch.eve_channels) h.setZero();
  ch.eve_stacked.setZero();
  return ch;
}

inline Eigen::VectorXcd vec(const CMatrix& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

}  // namespace oracle
