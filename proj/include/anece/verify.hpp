#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anece/capacity.hpp"
#include "anece/dofcalc.hpp"
#include "anece/model.hpp"
#include "anece/pilots.hpp"

namespace anece {

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of values against log2 sigma^2.
SlopeFit fit_slope(const CapacityCurve& curve);
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// max(0.15, 3% of |target|)
double default_slope_tolerance(double target);

/// A negative tol selects default_slope_tolerance.
CheckResult verify_slope(const std::string& name, const CapacityCurve& curve, int target_dof,
                         double tol = -1.0);

/// Probability-one rank statements checked on n_draws channel draws. Each
/// result counts the passing draws against n_draws.
std::vector<CheckResult> rank_oracle_suite(const NetworkConfig& cfg, std::uint64_t seed,
                                           int n_draws);

inline constexpr double kGrowthLowLog2 = 14.0;  // sigma^2 = 2^14 against 2^24

/// Growing-eigenvalue counts of the phase-1 covariances.
std::vector<CheckResult> eig_growth_suite(const NetworkConfig& cfg, const PilotSet& ps);

struct IdentityGrid {
  int m_min = 2;
  int m_max = 5;
  int n_max = 3;
  int n_eve_max = 12;
  int k2_max = 8;
  // Two-user grids.
  int two_user_n_max = 4;
  int two_user_n_eve_max = 10;
  int two_user_k_max = 10;
};

/// Names of the identity families, in report order.
const std::vector<std::string>& identity_manifest();

/// One result per manifest entry; measured is the number of violations.
std::vector<CheckResult> identity_suite(const IdentityGrid& grid = {});

/// Gap identity with the gap shifted by one. Expected to fail.
CheckResult tampered_gap_identity(const IdentityGrid& grid = {});

struct ComparisonRow {
  std::string scheme;
  int phase1_dof = 0;
  int phase2_dof = 0;
  int total_dof = 0;
  int phase1_slots = 0;
  int phase2_slots = 0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

/// Pair (1, 2) under every applicable scheme with an aggregate phase-2 budget
/// of k2 slots. Pair-wise rows split k2 evenly over the M(M-1)/2 sessions and
/// throw std::invalid_argument if it does not divide. The modified row (M = 2)
/// uses K = k2 + max N_i slots.
ComparisonTable compare_schemes(const NetworkConfig& cfg, int k2);

}  // namespace anece
