#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "anece/model.hpp"

namespace anece {

inline constexpr int pos(int x) { return x > 0 ? x : 0; }

/// A user pair (i, j) in a network, 0-based.
struct DofScenario {
  NetworkConfig cfg;
  int i = 0;
  int j = 1;

  /// Throws std::invalid_argument for an invalid config or pair.
  static DofScenario make(const NetworkConfig& cfg, int i, int j);

  int n_i() const { return cfg.antennas_of(i); }
  int n_j() const { return cfg.antennas_of(j); }
  int n_t() const { return cfg.total_antennas(); }
  int n_min() const { return cfg.min_antennas(); }
  int n_e() const { return cfg.n_eve; }
  int k2() const { return cfg.k2; }
  /// (K_2 - N_min)^+
  int delta_k2() const { return pos(cfg.k2 - n_min()); }
  /// (N_E - N_T)^+
  int delta_ne() const { return pos(cfg.n_eve - n_t()); }
  DofScenario swapped() const { return DofScenario{cfg, j, i}; }
};

int dof_phase1(int n_i, int n_j);

int dof_cij(const DofScenario& s);

struct EntropyTerms {
  int h_yi_given_hi = 0;
  int h_ye_given_hep = 0;
  int h_joint_i_e = 0;
  int h_joint_i_j_e = 0;
};

EntropyTerms dof_entropy_terms(const DofScenario& s);

int dof_leakage(const DofScenario& s);

/// Lower bound of the phase-2 SDoF; may be negative.
int dof_phase2_lower(const DofScenario& s);
int dof_phase2_lower_plus(const DofScenario& s);

int dof_phase2_upper(const DofScenario& s);

int dof_gap(const DofScenario& s);

/// Eavesdropper-size regions of the two-user formulas: C1 for N_E <= N_2 - N_1,
/// C2 for N_2 - N_1 <= N_E <= N_1 + N_2, C3 for N_E >= N_1 + N_2.
enum class Region { c1, c2, c3 };

/// First region containing n_eve (boundaries belong to both neighbours).
Region region_of(int n1, int n2, int n_eve);

/// One branch of the piecewise two-user phase-2 SDoF, evaluated regardless of
/// whether n_eve lies in that region.
int two_user_original_branch(Region r, int n1, int n2, int n_eve, int k2);

/// Phase-2 SDoF of the original two-user scheme, n1 <= n2.
int dof_two_user_original(int n1, int n2, int n_eve, int k2);

struct PairwiseDof {
  int lower = 0;
  int upper = 0;
  int gap = 0;
};

/// Phase-2 bounds of one pair-wise session of k2_session slots.
PairwiseDof dof_pairwise(int n_ip, int n_jp, int n_eve, int k2_session);

struct ModifiedDof {
  int lower_12 = 0;
  int lower_21 = 0;
  int upper = 0;
  // Entropy DoF terms of the bounds.
  int term1 = 0;  // C_key,0
  int term2 = 0;  // h(Y_E' | H_E,P')
  int term3 = 0;  // h(Y_1, Y_E' | X_1, H_12, H_E,P')
  int term4 = 0;  // h(Y_2, Y_E' | X_2, H_21, H_E,P')
  int joint_all = 0;
};

ModifiedDof dof_modified_two_user(const TwoUserModifiedConfig& cfg);

/// Branch of the piecewise modified lower bound, as for the original scheme.
int modified_lower_branch(Region r, const TwoUserModifiedConfig& cfg);

enum class Scheme { all_user, pairwise, modified_two_user };

std::string_view to_string(Scheme s);
/// Throws std::invalid_argument for an unknown name.
Scheme scheme_from_string(std::string_view name);

struct PairwiseParams {
  int n_ip = 1;
  int n_jp = 1;
  int n_eve = 0;
  int k2_session = 0;
};

using SchemeParams = std::variant<DofScenario, PairwiseParams, TwoUserModifiedConfig>;

/// Phase-1 SDoF plus the clamped phase-2 SDoF. For all_user the better of the
/// two orderings of the pair is used. Throws std::invalid_argument when the
/// parameters do not belong to the scheme.
int dof_total(Scheme scheme, const SchemeParams& params);

}  // namespace anece
