#include "anece/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace anece {

using nlohmann::json;

int ScenarioFile::k2_session() const {
  if (!network) return 0;
  const int sessions = network->m * (network->m - 1) / 2;
  return network->k2 / sessions;
}

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ScenarioError(join(prefix, key), "unknown key");
  }
}

const json& require(const json& obj, const std::string& prefix, const std::string& key) {
  if (!obj.contains(key)) throw ScenarioError(join(prefix, key), "missing required key");
  return obj.at(key);
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ScenarioError(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw ScenarioError(path, "value out of range");
  return static_cast<int>(x);
}

NetworkConfig parse_network(const json& n) {
  const std::string p = "network";
  if (!n.is_object()) throw ScenarioError(p, "expected an object");
  reject_unknown(n, p, {"m", "antennas", "n_eve", "k1", "k2"});
  const json& ant = require(n, p, "antennas");
  if (!ant.is_array()) throw ScenarioError(p + ".antennas", "expected an array of integers");
  std::vector<int> antennas;
  for (std::size_t k = 0; k < ant.size(); ++k) {
    antennas.push_back(as_int(ant[k], p + ".antennas[" + std::to_string(k) + "]"));
  }
  std::optional<int> k1;
  if (n.contains("k1")) k1 = as_int(n.at("k1"), p + ".k1");
  NetworkConfig cfg = NetworkConfig::make(antennas, as_int(require(n, p, "n_eve"), p + ".n_eve"),
                                          as_int(require(n, p, "k2"), p + ".k2"), k1);
  if (n.contains("m")) cfg.m = as_int(n.at("m"), p + ".m");
  const auto v = config_violations(cfg);
  if (!v.empty()) throw ScenarioError(join(p, v.front().field), v.front().message);
  return cfg;
}

TwoUserModifiedConfig parse_modified(const json& n) {
  const std::string p = "network";
  if (!n.is_object()) throw ScenarioError(p, "expected an object");
  reject_unknown(n, p, {"n1", "n2", "k_total", "n_eve"});
  TwoUserModifiedConfig cfg;
  cfg.n1 = as_int(require(n, p, "n1"), p + ".n1");
  cfg.n2 = as_int(require(n, p, "n2"), p + ".n2");
  cfg.k_total = as_int(require(n, p, "k_total"), p + ".k_total");
  cfg.n_eve = as_int(require(n, p, "n_eve"), p + ".n_eve");
  const auto v = config_violations(cfg);
  if (!v.empty()) throw ScenarioError(join(p, v.front().field), v.front().message);
  return cfg;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ScenarioError("", "top level must be an object");
  reject_unknown(root, "", {"schema", "scheme", "network", "pair", "snr_grid", "mc_samples", "seed"});

  const int schema = as_int(require(root, "", "schema"), "schema");
  if (schema != kScenarioSchema) {
    throw ScenarioError("schema", "unsupported schema " + std::to_string(schema));
  }

  ScenarioFile s;
  const json& scheme = require(root, "", "scheme");
  if (!scheme.is_string()) throw ScenarioError("scheme", "expected a string");
  try {
    s.scheme = scheme_from_string(scheme.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("scheme", e.what());
  }

  const json& network = require(root, "", "network");
  int users = 2;
  if (s.scheme == Scheme::modified_two_user) {
    s.modified = parse_modified(network);
  } else {
    s.network = parse_network(network);
    users = s.network->m;
    if (s.scheme == Scheme::pairwise) {
      if (users < 3) throw ScenarioError("network.m", "pairwise scheme needs M >= 3");
      const int sessions = users * (users - 1) / 2;
      if (s.network->k2 % sessions != 0) {
        throw ScenarioError("network.k2", "K_2 = " + std::to_string(s.network->k2) +
                                              " is not divisible by P_0 = " + std::to_string(sessions));
      }
    }
  }

  if (root.contains("pair")) {
    const json& p = root.at("pair");
    if (!p.is_array() || p.size() != 2) throw ScenarioError("pair", "expected [i, j]");
    const int i = as_int(p[0], "pair[0]");
    const int j = as_int(p[1], "pair[1]");
    if (i < 1 || j < 1 || i > users || j > users || i == j) {
      throw ScenarioError("pair", "users must be distinct and in 1.." + std::to_string(users));
    }
    if (s.scheme == Scheme::modified_two_user && i != 1) {
      throw ScenarioError("pair", "modified_two_user pair is fixed to [1, 2]");
    }
    s.pair = {i - 1, j - 1};
  }

  if (root.contains("snr_grid")) {
    const json& g = root.at("snr_grid");
    if (!g.is_array()) throw ScenarioError("snr_grid", "expected an array of numbers");
    std::vector<double> pts;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!g[k].is_number()) throw ScenarioError("snr_grid[" + std::to_string(k) + "]", "expected a number");
      pts.push_back(g[k].get<double>());
    }
    try {
      s.snr_grid = SnrGrid(std::move(pts));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("snr_grid", e.what());
    }
  }

  if (root.contains("mc_samples")) {
    s.mc_samples = as_int(root.at("mc_samples"), "mc_samples");
    if (s.mc_samples < 1) throw ScenarioError("mc_samples", "must be >= 1");
  }

  const json& seed = require(root, "", "seed");
  if (!seed.is_number_unsigned()) throw ScenarioError("seed", "expected a non-negative integer");
  s.seed = seed.get<std::uint64_t>();
  return s;
}

ScenarioFile parse_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ScenarioError("", "cannot open scenario file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace anece
