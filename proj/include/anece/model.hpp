#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace anece {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Scenario of the all-user protocol: M full-duplex users, each with the same
/// number of transmit and receive antennas, plus an eavesdropper.
struct NetworkConfig {
  int m = 2;
  std::vector<int> antennas;
  int n_eve = 0;
  int k1 = 0;
  int k2 = 0;
  double eve_noise_var = 1.0;

  int total_antennas() const;
  int min_antennas() const;
  int max_antennas() const;
  /// Smallest legal pilot length, N_T - N_min.
  int min_pilot_length() const { return total_antennas() - min_antennas(); }
  int antennas_of(int user) const { return antennas.at(static_cast<std::size_t>(user)); }

  /// Builds a config with K_1 defaulting to N_T - N_min.
  static NetworkConfig make(std::vector<int> antennas, int n_eve, int k2,
                            std::optional<int> k1 = std::nullopt);
  static NetworkConfig symmetric(int m, int n, int n_eve, int k2,
                                 std::optional<int> k1 = std::nullopt);
};

/// Two users with square pilots of unequal length (N_1 <= N_2) over K slots.
struct TwoUserModifiedConfig {
  int n1 = 1;
  int n2 = 1;
  int k_total = 1;
  int n_eve = 0;

  int total_antennas() const { return n1 + n2; }
  int antenna_gap() const { return n2 - n1; }
};

/// A constraint violation, tagged with the config field it concerns.
struct Violation {
  std::string field;
  std::string message;
};

std::vector<Violation> config_violations(const NetworkConfig& cfg);
std::vector<Violation> config_violations(const TwoUserModifiedConfig& cfg);

/// Violated constraints as human-readable strings; empty iff valid.
std::vector<std::string> validate_config(const NetworkConfig& cfg);
std::vector<std::string> validate_config(const TwoUserModifiedConfig& cfg);

/// Ordered list of log2(sigma^2) exponents.
class SnrGrid {
 public:
  explicit SnrGrid(std::vector<double> points);

  /// log2 sigma^2 in {12, 14, ..., 24}.
  static SnrGrid default_high_snr();

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double sigma2_at(std::size_t k) const;

 private:
  std::vector<double> points_;
};

/// Analytic DoF values keyed by formula identifier.
struct DofReport {
  std::map<std::string, int> entries;

  void set(const std::string& key, int value) { entries[key] = value; }
  int at(const std::string& key) const { return entries.at(key); }
};

/// One empirical-versus-analytic verification outcome.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Deliberately wrong target; expected to fail.
  bool negative_control = false;

  static CheckResult make(std::string name, double measured, double target, double tolerance,
                          bool negative_control = false);
};

}  // namespace anece
