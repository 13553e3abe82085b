// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "anece/capacity.hpp"
#include "anece/commands.hpp"
#include "anece/dofcalc.hpp"
#include "anece/linalg.hpp"
#include "anece/scenario.hpp"
#include "anece/verify.hpp"

using namespace anece;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

const SnrGrid kGrid = SnrGrid::default_high_snr();
constexpr int kSamples = 2000;

Outcome c1_phase1_slope() {
  Outcome o;
  const std::vector<NetworkConfig> cfgs{NetworkConfig::make({1, 1}, 1, 1),
                                        NetworkConfig::make({2, 3}, 1, 1),
                                        NetworkConfig::make({2, 2, 2}, 1, 1)};
  const std::vector<int> expected{1, 6, 4};
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const auto t0 = std::chrono::steady_clock::now();
    const PilotSet ps = build_pilots(cfgs[c], 1);
    const auto curve = trace_exact(kGrid, [&](double s2) { return phase1_skc_exact(cfgs[c], ps, 0, 1, s2); });
    const double slope = fit_slope(curve).slope;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(std::abs(slope - expected[c]) <= 0.15, "config " + std::to_string(c) + " slope " + num(slope));
    o.expect(secs < 5.0, "config " + std::to_string(c) + " took " + num(secs) + " s");
  }
  return o;
}

Outcome c2_cij_slope() {
  Outcome o;
  for (int k2 = 1; k2 <= 3; ++k2) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = NetworkConfig::symmetric(3, 2, 1, k2);
    const auto curve = trace_mc(kGrid, kSamples, [&](double s2) { return cij_phase2_mc(cfg, 0, 1, s2, kSamples, 2); });
    const double slope = fit_slope(curve).slope;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(std::abs(slope - 2 * k2) <= 0.15, "K2=" + std::to_string(k2) + " slope " + num(slope));
    o.expect(secs < 30.0, "K2=" + std::to_string(k2) + " took " + num(secs) + " s");
  }
  return o;
}

Outcome c3_entropy_slope() {
  Outcome o;
  const int cases[3][3] = {{2, 3, 4}, {3, 1, 2}, {1, 1, 1}};
  for (const auto& c : cases) {
    const int target = std::min(c[0], c[1]) * c[2];
    const auto curve = trace_mc(kGrid, kSamples, [&](double s2) {
      return entropy_cond_gaussian_mc(c[0], c[1], c[2], s2, kSamples, 3);
    });
    const double slope = fit_slope(curve).slope;
    o.expect(std::abs(slope - target) <= 0.15, "target " + std::to_string(target) + " slope " + num(slope));
  }
  return o;
}

Outcome c4_ckey0_slope() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const TwoUserModifiedConfig cfg{2, 3, 7, 6};
  const auto curve = trace_mc(kGrid, kSamples, [&](double s2) { return ckey0_modified_mc(cfg, s2, kSamples, 4); });
  const double slope = fit_slope(curve).slope;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(std::abs(slope - 18.0) <= 0.3, "slope " + num(slope));
  o.expect(secs < 30.0, "took " + num(secs) + " s");
  return o;
}

Outcome c5_eig_growth() {
  Outcome o;
  const std::vector<NetworkConfig> cfgs{NetworkConfig::make({1, 1}, 1, 1),
                                        NetworkConfig::make({2, 3}, 1, 1),
                                        NetworkConfig::make({2, 2, 2}, 1, 1)};
  const double lo = std::exp2(14);
  const double ratio = std::exp2(10);
  for (const auto& cfg : cfgs) {
    const PilotSet ps = build_pilots(cfg, 5);
    const int n_t = cfg.total_antennas();
    for (int i = 0; i < cfg.m; ++i) {
      for (int j = i + 1; j < cfg.m; ++j) {
        const int n_i = cfg.antennas_of(i);
        const int n_j = cfg.antennas_of(j);
        const int target = n_i * (n_t - n_i) + n_j * (n_t - n_j) - n_i * n_j;
        const int count = eig_growth_count(phase1_joint_covariance(ps, i, j, lo),
                                           phase1_joint_covariance(ps, i, j, lo * ratio), ratio);
        o.expect(count == target, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") count " +
                                      std::to_string(count) + " != " + std::to_string(target));
      }
    }
  }
  return o;
}

Outcome c6_rank_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int m : {2, 3}) {
    for (int n : {1, 2}) {
      for (int ne : {1, 3, 5}) {
        const auto results = rank_oracle_suite(NetworkConfig::symmetric(m, n, ne, 1), 7, 100);
        const std::size_t expected = m >= 3 ? 4 : 3;
        o.expect(results.size() == expected, "missing rank checks");
        for (const auto& r : results) {
          o.expect(r.measured == 100.0 && r.target == 100.0,
                   r.name + " M=" + std::to_string(m) + " N=" + std::to_string(n) + " NE=" +
                       std::to_string(ne) + " passed " + num(r.measured));
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 10.0, "took " + num(secs) + " s");
  return o;
}

Outcome c7_identities() {
  Outcome o;
  const IdentityGrid grid;
  o.expect(grid.m_min == 2 && grid.m_max == 5 && grid.n_max == 3 && grid.n_eve_max == 12 && grid.k2_max == 8,
           "default grid differs");
  o.expect(grid.two_user_n_max == 4, "two-user grid differs");
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = identity_suite(grid);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(results.size() == identity_manifest().size() && results.size() == 14, "manifest size");
  for (const auto& r : results) o.expect(r.passed, r.name + " violations " + num(r.measured));
  o.expect(secs < 10.0, "took " + num(secs) + " s");
  return o;
}

Outcome c8_compare() {
  Outcome o;
  const auto t = compare_schemes(NetworkConfig::symmetric(3, 2, 7, 3), 3);
  o.expect(t.rows.size() == 2, "row count");
  if (t.rows.size() == 2) {
    o.expect(t.rows[0].scheme == "all_user" && t.rows[0].phase2_dof == 2, "all_user phase 2");
    o.expect(t.rows[1].scheme == "pairwise" && t.rows[1].phase2_dof == 0, "pairwise phase 2");
    o.expect(t.rows[0].phase1_slots == 4 && t.rows[1].phase1_slots == 6, "phase 1 slots");
  }
  return o;
}

const char* kScenario = R"({
  "schema": 1,
  "scheme": "all_user",
  "network": {"antennas": [2, 2, 2], "n_eve": 4, "k2": 2},
  "mc_samples": 2000,
  "seed": 11
})";

std::string scenario_path() {
  const auto p = std::filesystem::temp_directory_path() / "anece_acceptance_scenario.json";
  std::ofstream(p) << kScenario;
  return p.string();
}

Outcome c9_negative_controls() {
  Outcome o;
  const auto cfg = NetworkConfig::symmetric(3, 2, 1, 2);
  const auto curve = trace_mc(kGrid, kSamples, [&](double s2) { return cij_phase2_mc(cfg, 0, 1, s2, kSamples, 9); });
  o.expect(verify_slope("cij", curve, 4).passed, "correct target rejected");
  o.expect(!verify_slope("cij", curve, 5).passed, "wrong slope target passed");
  o.expect(!tampered_gap_identity().passed, "tampered identity passed");

  const ScenarioFile s = parse_scenario(scenario_path());
  VerifyOptions opt;
  const auto rows = run_verification(s, opt);
  int negatives = 0;
  for (const auto& r : rows) {
    if (r.name.rfind(kNegativePrefix, 0) == 0) {
      ++negatives;
      o.expect(!r.passed, r.name + " passed");
    }
  }
  o.expect(negatives >= 2, "negative controls missing from verify");
  std::ostringstream sink;
  opt.inject_fault = true;
  o.expect(cmd_verify(s, sink, opt) == kExitCheckFailed, "fault injection did not exit 1");
  return o;
}

Outcome c10_determinism() {
  Outcome o;
  const std::string path = scenario_path();
  std::ostringstream a;
  std::ostringstream b;
  const int rc_a = cmd_verify(parse_scenario(path), a);
  const int rc_b = cmd_verify(parse_scenario(path), b);
  o.expect(rc_a == kExitOk && rc_b == kExitOk, "verify exit codes " + std::to_string(rc_a) + "," + std::to_string(rc_b));
  o.expect(a.str() == b.str(), "CSV differs between runs");
  o.expect(!a.str().empty(), "empty CSV");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"phase-1 slope", c1_phase1_slope},
      {"phase-2 C_ij slope", c2_cij_slope},
      {"conditional entropy slope", c3_entropy_slope},
      {"modified C_key,0 slope", c4_ckey0_slope},
      {"eigen-growth count", c5_eig_growth},
      {"rank oracles", c6_rank_suite},
      {"identity suite", c7_identities},
      {"scheme comparison", c8_compare},
      {"negative controls", c9_negative_controls},
      {"determinism", c10_determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu (%s) %.2f s%s%s\n", o.ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), secs, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
