#include "anece/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace anece {

int NetworkConfig::total_antennas() const {
  return std::accumulate(antennas.begin(), antennas.end(), 0);
}

int NetworkConfig::min_antennas() const {
  return antennas.empty() ? 0 : *std::min_element(antennas.begin(), antennas.end());
}

int NetworkConfig::max_antennas() const {
  return antennas.empty() ? 0 : *std::max_element(antennas.begin(), antennas.end());
}

NetworkConfig NetworkConfig::make(std::vector<int> antennas, int n_eve, int k2,
                                  std::optional<int> k1) {
  NetworkConfig cfg;
  cfg.m = static_cast<int>(antennas.size());
  cfg.antennas = std::move(antennas);
  cfg.n_eve = n_eve;
  cfg.k2 = k2;
  cfg.k1 = k1.value_or(cfg.min_pilot_length());
  return cfg;
}

NetworkConfig NetworkConfig::symmetric(int m, int n, int n_eve, int k2, std::optional<int> k1) {
  return make(std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), n), n_eve, k2, k1);
}

std::vector<Violation> config_violations(const NetworkConfig& cfg) {
  std::vector<Violation> out;
  if (cfg.m < 2) out.push_back({"m", "M < 2"});
  if (static_cast<int>(cfg.antennas.size()) != cfg.m) {
    out.push_back({"antennas", "antennas has " + std::to_string(cfg.antennas.size()) +
                                   " entries, expected M = " + std::to_string(cfg.m)});
  }
  for (std::size_t i = 0; i < cfg.antennas.size(); ++i) {
    if (cfg.antennas[i] < 1) {
      out.push_back({"antennas", "N_" + std::to_string(i + 1) + " < 1"});
    }
  }
  if (cfg.n_eve < 0) out.push_back({"n_eve", "N_E < 0"});
  if (cfg.k2 < 0) out.push_back({"k2", "K_2 < 0"});
  if (cfg.k1 < 1) out.push_back({"k1", "K_1 < 1"});
  const bool antennas_ok = !cfg.antennas.empty() &&
                           std::all_of(cfg.antennas.begin(), cfg.antennas.end(),
                                       [](int n) { return n >= 1; });
  if (antennas_ok && cfg.k1 < cfg.min_pilot_length()) {
    out.push_back({"k1", "K_1 < N_T-N_min (need >= " + std::to_string(cfg.min_pilot_length()) +
                             ")"});
  }
  if (cfg.eve_noise_var != 1.0) out.push_back({"eve_noise_var", "omega^2 must be 1"});
  return out;
}

std::vector<Violation> config_violations(const TwoUserModifiedConfig& cfg) {
  std::vector<Violation> out;
  if (cfg.n1 < 1) out.push_back({"n1", "N_1 < 1"});
  if (cfg.n2 < cfg.n1) out.push_back({"n2", "N_2 < N_1"});
  if (cfg.k_total < cfg.n2) {
    out.push_back({"k_total", "K < N_2 (need >= " + std::to_string(cfg.n2) + ")"});
  }
  if (cfg.n_eve < 0) out.push_back({"n_eve", "N_E < 0"});
  return out;
}

namespace {
std::vector<std::string> messages(const std::vector<Violation>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.message);
  return out;
}
}  // namespace

std::vector<std::string> validate_config(const NetworkConfig& cfg) {
  return messages(config_violations(cfg));
}

std::vector<std::string> validate_config(const TwoUserModifiedConfig& cfg) {
  return messages(config_violations(cfg));
}

SnrGrid::SnrGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 3) throw std::invalid_argument("SNR grid needs at least 3 points");
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k] > points_[k - 1])) {
      throw std::invalid_argument("SNR grid must be strictly increasing");
    }
  }
  for (double p : points_) {
    if (!std::isfinite(p)) throw std::invalid_argument("SNR grid point is not finite");
  }
}

SnrGrid SnrGrid::default_high_snr() { return SnrGrid({12, 14, 16, 18, 20, 22, 24}); }

double SnrGrid::sigma2_at(std::size_t k) const { return std::exp2(points_.at(k)); }

CheckResult CheckResult::make(std::string name, double measured, double target,
                              double tolerance, bool negative_control) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.target = target;
  r.tolerance = tolerance;
  r.passed = std::abs(measured - target) <= tolerance;
  r.negative_control = negative_control;
  return r;
}

}  // namespace anece
