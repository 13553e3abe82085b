#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "anece/model.hpp"

namespace anece {

/// Collaborative pilots of the all-user protocol: one N_i x K_1 block per
/// user and their vertical stack P.
struct PilotSet {
  std::vector<CMatrix> blocks;
  CMatrix stacked;

  static PilotSet from_blocks(std::vector<CMatrix> blocks);

  int users() const { return static_cast<int>(blocks.size()); }
  Index length() const { return stacked.cols(); }
  int total_antennas() const { return static_cast<int>(stacked.rows()); }
  int min_antennas() const;
  /// P_(i): the stack with block i removed.
  CMatrix without(int user) const;
};

/// P = Q_P R_P with [Q_P, Q_perp] unitary.
struct PilotQrSplit {
  CMatrix q_p;     // N_T x (N_T - N_min)
  CMatrix q_perp;  // N_T x N_min
  CMatrix r_p;     // (N_T - N_min) x K_1

  CMatrix unitary() const;
};

/// Pair-wise session schedule: column block p carries P_{i_p} and P_{j_p}.
struct PairwisePilotMatrix {
  CMatrix matrix;
  std::vector<std::pair<int, int>> sessions;  // 0-based (i_p, j_p), i_p < j_p
};

/// Square nonsingular pilots of the modified two-user scheme.
struct ModifiedPilotPair {
  CMatrix p1;  // N_1 x N_1
  CMatrix p2;  // N_2 x N_2
};

/// Random pilots meeting all three rank conditions. Deterministic per seed.
/// Throws std::runtime_error if bounded retries cannot satisfy the ranks.
PilotSet build_pilots(const NetworkConfig& cfg, std::uint64_t seed);

/// Empty iff rank(P_i) = N_i, rank(P_(i)) = N_T - N_i and rank(P) = N_T - N_min.
/// Throws std::invalid_argument on a shape mismatch with cfg.
std::vector<std::string> validate_pilots(const PilotSet& ps, const NetworkConfig& cfg);

/// Orthonormal split of the pilot row space. The diagonal of the leading
/// square part of R_P is real and non-negative.
PilotQrSplit qr_split(const PilotSet& ps);

PairwisePilotMatrix build_pairwise_matrix(const NetworkConfig& cfg,
                                          std::span<const CMatrix> per_session_blocks);

ModifiedPilotPair build_square_pilots(const TwoUserModifiedConfig& cfg, std::uint64_t seed);

}  // namespace anece
