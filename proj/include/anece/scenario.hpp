#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "anece/dofcalc.hpp"
#include "anece/model.hpp"

namespace anece {

inline constexpr int kScenarioSchema = 1;
inline constexpr int kDefaultMcSamples = 2000;

/// A parse or validation failure, tagged with the offending key path
/// (e.g. "network.k1").
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct ScenarioFile {
  Scheme scheme = Scheme::all_user;
  std::optional<NetworkConfig> network;            // all_user, pairwise
  std::optional<TwoUserModifiedConfig> modified;   // modified_two_user
  std::pair<int, int> pair{0, 1};                  // 0-based
  SnrGrid snr_grid = SnrGrid::default_high_snr();
  int mc_samples = kDefaultMcSamples;
  std::uint64_t seed = 0;

  /// Phase-2 slots per pair-wise session, K_2 / P_0.
  int k2_session() const;
};

/// Strict JSON parse: unknown keys, wrong types and invalid configs are
/// rejected with a ScenarioError.
ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile parse_scenario(const std::string& path);

}  // namespace anece
