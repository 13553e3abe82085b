#include "anece/commands.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "anece/capacity.hpp"
#include "anece/dofcalc.hpp"
#include "anece/linalg.hpp"
#include "anece/matrix_io.hpp"
#include "anece/pilots.hpp"
#include "anece/random.hpp"
#include "anece/verify.hpp"

namespace anece {

namespace {

void all_user_report(const ScenarioFile& s, DofReport& r) {
  const DofScenario d = DofScenario::make(*s.network, s.pair.first, s.pair.second);
  const EntropyTerms t = dof_entropy_terms(d);
  r.set("dof_phase1", dof_phase1(d.n_i(), d.n_j()));
  r.set("dof_cij", dof_cij(d));
  r.set("dof_leakage", dof_leakage(d));
  r.set("h_yi_given_hi", t.h_yi_given_hi);
  r.set("h_ye_given_hep", t.h_ye_given_hep);
  r.set("h_joint_i_e", t.h_joint_i_e);
  r.set("h_joint_i_j_e", t.h_joint_i_j_e);
  r.set("dof_phase2_lower", dof_phase2_lower(d));
  r.set("dof_phase2_lower_plus", dof_phase2_lower_plus(d));
  r.set("dof_phase2_lower_reverse", dof_phase2_lower(d.swapped()));
  r.set("dof_phase2_upper", dof_phase2_upper(d));
  r.set("dof_gap", dof_gap(d));
  r.set("delta_k2", d.delta_k2());
  r.set("dof_total", dof_total(Scheme::all_user, d));
  if (d.cfg.m == 2) {
    r.set("dof_two_user_original", dof_two_user_original(std::min(d.n_i(), d.n_j()),
                                                         std::max(d.n_i(), d.n_j()), d.n_e(), d.k2()));
  }
}

void pairwise_report(const ScenarioFile& s, DofReport& r) {
  const NetworkConfig& cfg = *s.network;
  const int ni = cfg.antennas_of(s.pair.first);
  const int nj = cfg.antennas_of(s.pair.second);
  const int sessions = cfg.m * (cfg.m - 1) / 2;
  const int k2s = s.k2_session();
  const PairwiseDof p = dof_pairwise(ni, nj, cfg.n_eve, k2s);
  r.set("dof_phase1", dof_phase1(ni, nj));
  r.set("dof_phase2_lower", p.lower);
  r.set("dof_phase2_upper", p.upper);
  r.set("dof_gap", p.gap);
  r.set("dof_phase2", pos(p.upper));
  r.set("dof_total", dof_total(Scheme::pairwise, PairwiseParams{ni, nj, cfg.n_eve, k2s}));
  r.set("k2_session", k2s);
  r.set("sessions", sessions);
  r.set("phase1_slots", sessions * cfg.max_antennas());
}

void modified_report(const ScenarioFile& s, DofReport& r) {
  const TwoUserModifiedConfig& c = *s.modified;
  const ModifiedDof d = dof_modified_two_user(c);
  const int original = dof_two_user_original(c.n1, c.n2, c.n_eve, c.k_total - c.n2);
  r.set("dof_phase1", dof_phase1(c.n1, c.n2));
  r.set("dof_phase2", pos(d.lower_12));
  r.set("dof_phase2_lower", d.lower_12);
  r.set("dof_phase2_lower_21", d.lower_21);
  r.set("dof_phase2_upper", d.upper);
  r.set("dof_gap", d.upper - d.lower_12);
  r.set("dof_total", dof_total(Scheme::modified_two_user, c));
  r.set("dof_ckey0", d.term1);
  r.set("h_ye_given_hep", d.term2);
  r.set("h_joint_1_e", d.term3);
  r.set("h_joint_2_e", d.term4);
  r.set("h_joint_1_2_e", d.joint_all);
  r.set("dof_original_phase2", original);
  r.set("dof_original_total", dof_phase1(c.n1, c.n2) + pos(original));
}

CheckResult negative(CheckResult c) {
  c.name = kNegativePrefix + c.name;
  c.negative_control = true;
  return c;
}

void append(std::vector<CheckResult>& dst, const std::vector<CheckResult>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Slope checks of the phase-1 key capacity and phase-2 capacity of a
// network pair.
void network_slopes(const NetworkConfig& cfg, int i, int j, const ScenarioFile& s,
                    std::vector<CheckResult>& out) {
  const PilotSet ps = build_pilots(cfg, s.seed);
  const CapacityCurve p1 = trace_exact(s.snr_grid, [&](double sigma2) {
    return phase1_skc_exact(cfg, ps, i, j, sigma2);
  });
  const int target1 = dof_phase1(cfg.antennas_of(i), cfg.antennas_of(j));
  out.push_back(verify_slope("slope.phase1_skc", p1, target1));
  out.push_back(negative(verify_slope("slope.phase1_skc_wrong_target", p1, target1 + 1)));
  append(out, eig_growth_suite(cfg, ps));

  if (cfg.k2 >= 1) {
    const DofScenario d = DofScenario::make(cfg, i, j);
    const CapacityCurve c = trace_mc(s.snr_grid, s.mc_samples, [&](double sigma2) {
      return cij_phase2_mc(cfg, i, j, sigma2, s.mc_samples, s.seed);
    });
    out.push_back(verify_slope("slope.cij_phase2", c, dof_cij(d)));

    const int n_i = cfg.antennas_of(i);
    const int n_t = cfg.total_antennas();
    const CapacityCurve h = trace_mc(s.snr_grid, s.mc_samples, [&](double sigma2) {
      return entropy_cond_gaussian_mc(n_i, n_t - n_i, cfg.k2, sigma2, s.mc_samples, s.seed);
    });
    out.push_back(verify_slope("slope.entropy_yi_given_hi", h, dof_entropy_terms(d).h_yi_given_hi));
  }
}

}  // namespace

DofReport formula_report(const ScenarioFile& s) {
  DofReport r;
  switch (s.scheme) {
    case Scheme::all_user: all_user_report(s, r); break;
    case Scheme::pairwise: pairwise_report(s, r); break;
    case Scheme::modified_two_user: modified_report(s, r); break;
  }
  return r;
}

int cmd_formula(const ScenarioFile& s, std::ostream& out) {
  const DofReport r = formula_report(s);
  nlohmann::ordered_json j;
  j["scheme"] = std::string(to_string(s.scheme));
  for (const auto& [key, value] : r.entries) j[key] = value;
  out << j.dump(2) << '\n';
  return kExitOk;
}

std::vector<CheckResult> run_verification(const ScenarioFile& s, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  switch (s.scheme) {
    case Scheme::all_user: {
      network_slopes(*s.network, s.pair.first, s.pair.second, s, out);
      append(out, rank_oracle_suite(*s.network, s.seed, opt.rank_draws));
      break;
    }
    case Scheme::pairwise: {
      // A pair-wise session is a two-user run of the pair.
      const NetworkConfig& cfg = *s.network;
      const NetworkConfig session = NetworkConfig::make(
          {cfg.antennas_of(s.pair.first), cfg.antennas_of(s.pair.second)}, cfg.n_eve, s.k2_session());
      network_slopes(session, 0, 1, s, out);
      append(out, rank_oracle_suite(cfg, s.seed, opt.rank_draws));
      break;
    }
    case Scheme::modified_two_user: {
      const TwoUserModifiedConfig& c = *s.modified;
      const ModifiedPilotPair pp = build_square_pilots(c, s.seed);
      const CapacityCurve p1 = trace_exact(s.snr_grid, [&](double sigma2) {
        return modified_phase1_mi_exact(c, pp, sigma2);
      });
      out.push_back(verify_slope("slope.phase1_mi", p1, dof_phase1(c.n1, c.n2)));
      out.push_back(negative(verify_slope("slope.phase1_mi_wrong_target", p1, dof_phase1(c.n1, c.n2) + 1)));
      const CapacityCurve k0 = trace_mc(s.snr_grid, s.mc_samples, [&](double sigma2) {
        return ckey0_modified_mc(c, sigma2, s.mc_samples, s.seed);
      });
      out.push_back(verify_slope("slope.ckey0", k0, dof_modified_two_user(c).term1));
      const NetworkConfig net = NetworkConfig::make({c.n1, c.n2}, c.n_eve, c.k_total - c.n2);
      append(out, rank_oracle_suite(net, s.seed, opt.rank_draws));
      break;
    }
  }
  append(out, identity_suite());
  CheckResult tampered = tampered_gap_identity();
  tampered.name = kNegativePrefix + tampered.name;
  out.push_back(tampered);

  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  if (opt.inject_fault) {
    for (auto& c : out) {
      if (c.negative_control) continue;
      c = CheckResult::make(c.name, c.measured, c.target + 2.0 * c.tolerance + 1.0, c.tolerance);
      break;
    }
  }
  return out;
}

void write_check_csv(std::ostream& out, const std::vector<CheckResult>& rows) {
  write_csv_row(out, {"name", "measured", "target", "tolerance", "passed"});
  for (const auto& c : rows) {
    write_csv_row(out, {c.name, format_number(c.measured), format_number(c.target),
                        format_number(c.tolerance), c.passed ? "true" : "false"});
  }
}

int cmd_verify(const ScenarioFile& s, std::ostream& out, const VerifyOptions& opt) {
  const auto rows = run_verification(s, opt);
  write_check_csv(out, rows);
  // A negative control that passes means its tolerance is vacuous.
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const CheckResult& c) {
    return c.negative_control ? !c.passed : c.passed;
  });
  return ok ? kExitOk : kExitCheckFailed;
}

SweepAxis sweep_axis_from_string(const std::string& name) {
  if (name == "n_eve") return SweepAxis::n_eve;
  if (name == "k2") return SweepAxis::k2;
  if (name == "m") return SweepAxis::m;
  if (name == "k") return SweepAxis::k;
  throw std::invalid_argument("unknown sweep axis \"" + name + "\" (n_eve, k2, m, k)");
}

namespace {

const char* axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::n_eve: return "n_eve";
    case SweepAxis::k2: return "k2";
    case SweepAxis::m: return "m";
    case SweepAxis::k: return "k";
  }
  return "";
}

void require_valid(const ScenarioFile& s, int value) {
  std::vector<std::string> v;
  if (s.network) v = validate_config(*s.network);
  if (s.modified) v = validate_config(*s.modified);
  if (!v.empty()) {
    throw std::invalid_argument("sweep value " + std::to_string(value) + ": " + v.front());
  }
  if (s.scheme == Scheme::pairwise) {
    const int sessions = s.network->m * (s.network->m - 1) / 2;
    if (s.network->m < 3) throw std::invalid_argument("pairwise scheme needs M >= 3");
    if (s.network->k2 % sessions != 0) {
      throw std::invalid_argument("sweep value " + std::to_string(value) +
                                  ": K_2 not divisible by P_0 = " + std::to_string(sessions));
    }
  }
}

ScenarioFile at_axis_value(const ScenarioFile& base, SweepAxis axis, int value) {
  ScenarioFile s = base;
  const bool modified = s.scheme == Scheme::modified_two_user;
  switch (axis) {
    case SweepAxis::n_eve:
      if (modified) s.modified->n_eve = value; else s.network->n_eve = value;
      break;
    case SweepAxis::k2:
      if (modified) throw std::invalid_argument("axis k2 does not apply to modified_two_user; use k");
      s.network->k2 = value;
      break;
    case SweepAxis::k:
      if (!modified) throw std::invalid_argument("axis k applies only to modified_two_user");
      s.modified->k_total = value;
      break;
    case SweepAxis::m: {
      if (modified) throw std::invalid_argument("axis m does not apply to modified_two_user");
      NetworkConfig& c = *s.network;
      if (c.min_antennas() != c.max_antennas()) {
        throw std::invalid_argument("axis m needs a symmetric network");
      }
      if (value < 2) throw std::invalid_argument("sweep value " + std::to_string(value) + ": M < 2");
      const int n = c.antennas.front();
      const int old_default = c.min_pilot_length();
      const int extra_k1 = c.k1 - old_default;
      c = NetworkConfig::symmetric(value, n, c.n_eve, c.k2);
      c.k1 += std::max(extra_k1, 0);
      if (s.pair.first >= value || s.pair.second >= value) {
        throw std::invalid_argument("sweep value " + std::to_string(value) + ": pair out of range");
      }
      break;
    }
  }
  require_valid(s, value);
  return s;
}

}  // namespace

int cmd_sweep(const ScenarioFile& s, SweepAxis axis, int from, int to, std::ostream& out) {
  if (from > to) throw std::invalid_argument("sweep range is empty");
  std::vector<DofReport> reports;
  std::set<std::string> keys;
  for (int v = from; v <= to; ++v) {
    reports.push_back(formula_report(at_axis_value(s, axis, v)));
    for (const auto& [k, value] : reports.back().entries) keys.insert(k);
  }
  std::vector<std::string> header{axis_name(axis)};
  header.insert(header.end(), keys.begin(), keys.end());
  write_csv_row(out, header);
  for (int v = from; v <= to; ++v) {
    const DofReport& r = reports[static_cast<std::size_t>(v - from)];
    std::vector<std::string> row{std::to_string(v)};
    for (const auto& k : keys) {
      auto it = r.entries.find(k);
      row.push_back(it == r.entries.end() ? "" : std::to_string(it->second));
    }
    write_csv_row(out, row);
  }
  return kExitOk;
}

namespace {

bool audit(std::ostream& log, const std::string& what, int rank, int target) {
  log << what << "=" << rank << (rank == target ? " OK" : " FAIL (expected " + std::to_string(target) + ")")
      << '\n';
  return rank == target;
}

std::string strip_txt(const std::string& path) {
  const std::string ext = ".txt";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size());
  }
  return path;
}

}  // namespace

int cmd_pilots(const ScenarioFile& s, const std::string& out_path, std::ostream& log) {
  if (out_path.empty()) throw std::invalid_argument("pilots needs --out");
  bool ok = true;
  switch (s.scheme) {
    case Scheme::all_user: {
      const NetworkConfig& cfg = *s.network;
      const PilotSet ps = build_pilots(cfg, s.seed);
      save_matrix(out_path, ps.stacked);
      log << "P: " << ps.stacked.rows() << "x" << ps.stacked.cols() << " -> " << out_path << '\n';
      ok &= audit(log, "rank(P)", numerical_rank(ps.stacked), cfg.min_pilot_length());
      for (int i = 0; i < cfg.m; ++i) {
        const std::string idx = std::to_string(i + 1);
        ok &= audit(log, "rank(P_" + idx + ")", numerical_rank(ps.blocks[static_cast<std::size_t>(i)]),
                    cfg.antennas_of(i));
        ok &= audit(log, "rank(P_(" + idx + "))", numerical_rank(ps.without(i)),
                    cfg.total_antennas() - cfg.antennas_of(i));
      }
      break;
    }
    case Scheme::pairwise: {
      const NetworkConfig& cfg = *s.network;
      Engine eng = substream(s.seed, "pairwise_pilots");
      std::vector<CMatrix> blocks;
      for (int n : cfg.antennas) blocks.push_back(complex_gaussian(n, cfg.max_antennas(), eng));
      const PairwisePilotMatrix pp = build_pairwise_matrix(cfg, blocks);
      save_matrix(out_path, pp.matrix);
      log << "P_pair: " << pp.matrix.rows() << "x" << pp.matrix.cols() << " -> " << out_path << '\n';
      ok &= audit(log, "rank(P_pair)", numerical_rank(pp.matrix), cfg.total_antennas());
      break;
    }
    case Scheme::modified_two_user: {
      const ModifiedPilotPair pp = build_square_pilots(*s.modified, s.seed);
      const std::string base = strip_txt(out_path);
      save_matrix(base + "_P1.txt", pp.p1);
      save_matrix(base + "_P2.txt", pp.p2);
      log << "P_1: " << pp.p1.rows() << "x" << pp.p1.cols() << " -> " << base << "_P1.txt\n";
      log << "P_2: " << pp.p2.rows() << "x" << pp.p2.cols() << " -> " << base << "_P2.txt\n";
      ok &= audit(log, "rank(P_1)", numerical_rank(pp.p1), s.modified->n1);
      ok &= audit(log, "rank(P_2)", numerical_rank(pp.p2), s.modified->n2);
      break;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_compare(const ScenarioFile& s, std::ostream& out) {
  ComparisonTable t;
  if (s.scheme == Scheme::modified_two_user) {
    const TwoUserModifiedConfig& c = *s.modified;
    t = compare_schemes(NetworkConfig::make({c.n1, c.n2}, c.n_eve, c.k_total - c.n2),
                        c.k_total - c.n2);
  } else {
    NetworkConfig cfg = *s.network;
    // compare_schemes reports pair (1, 2); bring the scenario pair there.
    std::swap(cfg.antennas[0], cfg.antennas[static_cast<std::size_t>(s.pair.first)]);
    const int second = s.pair.second == 0 ? s.pair.first : s.pair.second;
    std::swap(cfg.antennas[1], cfg.antennas[static_cast<std::size_t>(second)]);
    t = compare_schemes(cfg, cfg.k2);
  }
  write_csv_row(out, {"scheme", "phase1_dof", "phase2_dof", "total_dof", "phase1_slots", "phase2_slots"});
  for (const auto& r : t.rows) {
    write_csv_row(out, {r.scheme, std::to_string(r.phase1_dof), std::to_string(r.phase2_dof),
                        std::to_string(r.total_dof), std::to_string(r.phase1_slots),
                        std::to_string(r.phase2_slots)});
  }
  return kExitOk;
}

}  // namespace anece
