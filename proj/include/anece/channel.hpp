#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "anece/model.hpp"
#include "anece/pilots.hpp"

namespace anece {

/// Channels of one coherence period. H_{j,i} is stored as the exact transpose
/// of H_{i,j}.
struct ChannelRealization {
  std::vector<int> antennas;
  std::map<std::pair<int, int>, CMatrix> user_channels;  // (i, j), i != j: N_i x N_j
  std::vector<CMatrix> eve_channels;                     // N_E x N_i
  CMatrix eve_stacked;                                   // N_E x N_T

  int users() const { return static_cast<int>(antennas.size()); }
  int n_eve() const { return static_cast<int>(eve_stacked.rows()); }
  const CMatrix& h(int i, int j) const { return user_channels.at({i, j}); }
  /// H_i = [H_{i,l}] over l != i in user order, N_i x (N_T - N_i).
  CMatrix receive_stack(int i) const;
};

ChannelRealization sample_channels(std::span<const int> antennas, int n_eve, std::uint64_t seed,
                                   std::uint64_t index = 0);
ChannelRealization sample_channels(const NetworkConfig& cfg, std::uint64_t seed,
                                   std::uint64_t index = 0);

struct Phase1Signals {
  std::vector<CMatrix> user_rx;  // N_i x K_1
  CMatrix eve_rx;                // N_E x K_1
};

struct Phase2Signals {
  std::vector<CMatrix> symbols;  // N_i x K_2
  std::vector<CMatrix> user_rx;  // N_i x K_2
  CMatrix eve_rx;                // N_E x K_2
};

struct ModifiedSessionSignals {
  CMatrix x1;           // N_1 x (K - N_1)
  CMatrix x2;           // N_2 x (K - N_2)
  CMatrix y1_p1;        // N_1 x N_2
  CMatrix y2_p1;        // N_2 x N_1
  CMatrix y1_p2;        // N_1 x (K - N_2)
  CMatrix y2_p2;        // N_2 x (K - N_1)
  CMatrix eve_rx_full;  // N_E x K
};

// noise_amplitude scales every noise draw; 0 gives the noiseless signal.

Phase1Signals synth_phase1(const ChannelRealization& ch, const PilotSet& ps, double sigma,
                           std::uint64_t seed, double noise_amplitude = 1.0);

Phase2Signals synth_phase2(const ChannelRealization& ch, const NetworkConfig& cfg, double sigma,
                           std::uint64_t seed, double noise_amplitude = 1.0);

ModifiedSessionSignals synth_modified_session(const TwoUserModifiedConfig& cfg,
                                              const ModifiedPilotPair& pp,
                                              const ChannelRealization& ch, double sigma,
                                              std::uint64_t seed, double noise_amplitude = 1.0);

}  // namespace anece
