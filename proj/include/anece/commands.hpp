#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anece/model.hpp"
#include "anece/scenario.hpp"

namespace anece {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMinMcSamples = 100;
inline constexpr int kDefaultRankDraws = 100;
inline constexpr const char* kNegativePrefix = "negative_control.";

/// All analytic values that apply to the scenario's scheme.
DofReport formula_report(const ScenarioFile& s);

/// Writes formula_report as one JSON object.
int cmd_formula(const ScenarioFile& s, std::ostream& out);

struct VerifyOptions {
  int rank_draws = kDefaultRankDraws;
  /// Test hook: shifts the target of one regular check so it fails.
  bool inject_fault = false;
};

/// Every check for the scenario, sorted by name. Negative controls carry the
/// kNegativePrefix name prefix.
std::vector<CheckResult> run_verification(const ScenarioFile& s, const VerifyOptions& opt = {});

/// CSV of run_verification. Returns kExitCheckFailed if a regular check
/// fails or a negative control passes.
int cmd_verify(const ScenarioFile& s, std::ostream& out, const VerifyOptions& opt = {});

void write_check_csv(std::ostream& out, const std::vector<CheckResult>& rows);

enum class SweepAxis { n_eve, k2, m, k };
/// Throws std::invalid_argument for an unknown name.
SweepAxis sweep_axis_from_string(const std::string& name);

/// One CSV row of formula values per axis value in [from, to]. Throws
/// std::invalid_argument if the axis does not apply to the scheme.
int cmd_sweep(const ScenarioFile& s, SweepAxis axis, int from, int to, std::ostream& out);

/// Writes pilot matrices next to out_path and a rank audit to log.
int cmd_pilots(const ScenarioFile& s, const std::string& out_path, std::ostream& log);

int cmd_compare(const ScenarioFile& s, std::ostream& out);

}  // namespace anece
