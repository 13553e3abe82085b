#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "anece/model.hpp"
#include "anece/pilots.hpp"

namespace anece {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Capacity in bits per coherence period at each grid point.
struct CapacityCurve {
  SnrGrid grid = SnrGrid::default_high_snr();
  std::vector<double> values;
  int mc_samples = 0;            // 0 for exact curves
  std::vector<double> mc_stderr;
};

/// R_{Y,i} = (sigma2 * sum_{l != i} P_l^T P_l^* + I_{K_1}) kron I_{N_i}.
CMatrix phase1_user_covariance(const PilotSet& ps, int i, double sigma2);

/// Joint covariance of [vec(Y_i); vec(Y_j^T)].
CMatrix phase1_joint_covariance(const PilotSet& ps, int i, int j, double sigma2);

/// Phase-1 secret-key capacity in bits, computed from the covariances above.
double phase1_skc_exact(const NetworkConfig& cfg, const PilotSet& ps, int i, int j, double sigma2);

/// I(a; b) in bits for a = sigma*A*h + w_a, b = sigma*B*h + w_b with h, w_a, w_b
/// i.i.d. CN(0, 1).
double gaussian_linear_mi(const CMatrix& a, const CMatrix& b, double sigma2);

/// Phase-1 mutual information of the modified two-user scheme.
double modified_phase1_mi_exact(const TwoUserModifiedConfig& cfg, const ModifiedPilotPair& pp,
                                double sigma2);

/// Monte Carlo phase-2 encryption capacity C_ij.
McEstimate cij_phase2_mc(const NetworkConfig& cfg, int i, int j, double sigma2, int n_samples,
                         std::uint64_t seed);

/// Monte Carlo C_key,0 of the modified two-user scheme.
McEstimate ckey0_modified_mc(const TwoUserModifiedConfig& cfg, double sigma2, int n_samples,
                             std::uint64_t seed);

/// h(Y | H) for Y = sigma*H*X + W, H m x n, X n x k, all i.i.d. CN(0, 1).
McEstimate entropy_cond_gaussian_mc(int m, int n, int k, double sigma2, int n_samples,
                                    std::uint64_t seed);

/// Evaluates value(sigma2) at every grid point.
CapacityCurve trace_exact(const SnrGrid& grid, const std::function<double(double)>& value);
CapacityCurve trace_mc(const SnrGrid& grid, int n_samples,
                       const std::function<McEstimate(double)>& value);

/// Mean and standard error of f(0..n-1). Samples may be evaluated on several
/// threads; the reduction order is fixed, so the result does not depend on
/// the thread count.
McEstimate mc_average(int n_samples, const std::function<double(std::uint64_t)>& f);

}  // namespace anece
