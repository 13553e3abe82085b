#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "anece/commands.hpp"
#include "anece/scenario.hpp"

using namespace anece;

namespace {

struct Globals {
  std::string scenario;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> mc_samples;
  bool allow_low_samples = false;
};

ScenarioFile load(const Globals& g) {
  ScenarioFile s = parse_scenario(g.scenario);
  if (g.seed) s.seed = *g.seed;
  if (g.mc_samples) {
    if (*g.mc_samples < 1) throw ScenarioError("mc_samples", "must be >= 1");
    s.mc_samples = *g.mc_samples;
  }
  if (s.mc_samples < kMinMcSamples && !g.allow_low_samples) {
    throw ScenarioError("mc_samples", std::to_string(s.mc_samples) + " < " +
                                          std::to_string(kMinMcSamples) +
                                          " gives unreliable slopes; pass --allow-low-samples");
  }
  return s;
}

// Runs fn with the --out file, or stdout when none is given. The file is
// written only after fn succeeds.
template <typename F>
int with_output(const Globals& g, F fn) {
  if (g.out.empty()) return fn(std::cout);
  std::ostringstream buf;
  const int rc = fn(buf);
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + g.out + " for writing");
  f << buf.str();
  if (!f) throw std::runtime_error("write failed: " + g.out);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ANECE secure degrees-of-freedom laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--scenario", g.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "Output path (stdout if omitted; pilots needs it)");
  app.add_option("--seed", g.seed, "Override the scenario seed");
  app.add_option("--mc-samples", g.mc_samples, "Override Monte Carlo samples per grid point");
  app.add_flag("--allow-low-samples", g.allow_low_samples, "Accept fewer than 100 Monte Carlo samples");

  auto* formula = app.add_subcommand("formula", "Analytic DoF values as JSON");
  auto* verify = app.add_subcommand("verify", "Run all checks, CSV report");
  bool inject_fault = false;
  int rank_draws = kDefaultRankDraws;
  verify->add_option("--rank-draws", rank_draws, "Channel draws for the rank oracles")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", inject_fault, "Tamper with one target (test hook)")
      ->group("");

  auto* sweep = app.add_subcommand("sweep", "Formula values along one axis, CSV");
  std::string axis;
  int from = 0;
  int to = 0;
  sweep->add_option("--axis", axis, "n_eve, k2, m or k")->required();
  sweep->add_option("--from", from, "First axis value")->required();
  sweep->add_option("--to", to, "Last axis value (inclusive)")->required();

  auto* pilots = app.add_subcommand("pilots", "Write pilot matrices and a rank audit");
  auto* compare = app.add_subcommand("compare", "Scheme comparison table, CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ScenarioFile s = load(g);
    if (*formula) return with_output(g, [&](std::ostream& o) { return cmd_formula(s, o); });
    if (*verify) {
      VerifyOptions opt;
      opt.rank_draws = rank_draws;
      opt.inject_fault = inject_fault;
      return with_output(g, [&](std::ostream& o) { return cmd_verify(s, o, opt); });
    }
    if (*sweep) {
      const SweepAxis a = sweep_axis_from_string(axis);
      return with_output(g, [&](std::ostream& o) { return cmd_sweep(s, a, from, to, o); });
    }
    if (*pilots) return cmd_pilots(s, g.out, std::cout);
    if (*compare) return with_output(g, [&](std::ostream& o) { return cmd_compare(s, o); });
  } catch (const ScenarioError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
