#include "anece/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "anece/channel.hpp"
#include "anece/freedom.hpp"
#include "anece/linalg.hpp"
#include "anece/random.hpp"

namespace anece {

using std::min;

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_slope: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("fit_slope: need at least 3 points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
    syy += (y[k] - my) * (y[k] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_slope: degenerate grid");
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double e = y[k] - (f.intercept + f.slope * x[k]);
    ss_res += e * e;
  }
  f.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return f;
}

SlopeFit fit_slope(const CapacityCurve& curve) { return fit_slope(curve.grid.points(), curve.values); }

double default_slope_tolerance(double target) { return std::max(0.15, 0.03 * std::abs(target)); }

CheckResult verify_slope(const std::string& name, const CapacityCurve& curve, int target_dof,
                         double tol) {
  if (tol < 0.0) tol = default_slope_tolerance(target_dof);
  return CheckResult::make(name, fit_slope(curve).slope, target_dof, tol);
}

namespace {

ChannelRealization zeroed(const ChannelRealization& ch) {
  ChannelRealization z = ch;
  for (auto& [key, h] : z.user_channels) h.setZero();
  for (auto& h : z.eve_channels) h.setZero();
  z.eve_stacked.setZero();
  return z;
}

CVector vec(const CMatrix& m) { return m.reshaped(); }

// [vec(H_i); vec(H_j)] as a linear image of the independent user-channel
// entries, each column scaled by the drawn value of its entry.
CMatrix joint_channel_map(const ChannelRealization& ch, int i, int j) {
  const ChannelRealization base = zeroed(ch);
  std::vector<CVector> cols;
  for (int u = 0; u < ch.users(); ++u) {
    for (int v = u + 1; v < ch.users(); ++v) {
      const CMatrix& h = ch.h(u, v);
      for (Index r = 0; r < h.rows(); ++r) {
        for (Index c = 0; c < h.cols(); ++c) {
          ChannelRealization z = base;
          z.user_channels[{u, v}](r, c) = h(r, c);
          z.user_channels[{v, u}](c, r) = h(r, c);
          const CVector a = vec(z.receive_stack(i));
          const CVector b = vec(z.receive_stack(j));
          CVector col(a.size() + b.size());
          col << a, b;
          cols.push_back(std::move(col));
        }
      }
    }
  }
  CMatrix out(cols.front().size(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = cols[k];
  return out;
}

}  // namespace

std::vector<CheckResult> rank_oracle_suite(const NetworkConfig& cfg, std::uint64_t seed,
                                           int n_draws) {
  if (!validate_config(cfg).empty()) throw std::invalid_argument("rank_oracle_suite: invalid config");
  if (n_draws < 1) throw std::invalid_argument("rank_oracle_suite: n_draws < 1");
  const int m = cfg.m;
  const int n_t = cfg.total_antennas();
  int ok_deficiency = 0;
  int ok_sum = 0;
  int ok_stacked = 0;
  int ok_pair = 0;

  for (int d = 0; d < n_draws; ++d) {
    const ChannelRealization ch = sample_channels(cfg, seed, static_cast<std::uint64_t>(d));

    bool good = true;
    for (int i = 0; i < m && good; ++i) {
      for (int j = i + 1; j < m && good; ++j) {
        const CMatrix l = joint_channel_map(ch, i, j);
        const int deficiency = static_cast<int>(l.rows()) - numerical_rank(l * l.adjoint());
        good = deficiency == cfg.antennas_of(i) * cfg.antennas_of(j);
      }
    }
    ok_deficiency += good;

    good = true;
    for (int i = 0; i < m; ++i) {
      const CMatrix h = ch.receive_stack(i);
      const int n_i = cfg.antennas_of(i);
      good = good && numerical_rank(h * h.adjoint()) == min(n_i, n_t - n_i);
    }
    ok_sum += good;

    good = true;
    for (int ip = 0; ip < m; ++ip) {
      for (int jp = 0; jp < m; ++jp) {
        if (ip == jp) continue;
        CMatrix s(cfg.antennas_of(ip) + cfg.n_eve, cfg.antennas_of(jp));
        s << ch.h(ip, jp), ch.eve_channels[static_cast<std::size_t>(jp)];
        good = good && numerical_rank(s) == min(cfg.n_eve + cfg.antennas_of(ip), cfg.antennas_of(jp));
      }
    }
    ok_stacked += good;

    if (m >= 3) {
      Engine eng = substream(seed, "pairwise_pilots", static_cast<std::uint64_t>(d));
      std::vector<CMatrix> blocks;
      for (int n : cfg.antennas) blocks.push_back(complex_gaussian(n, cfg.max_antennas(), eng));
      const PairwisePilotMatrix pp = build_pairwise_matrix(cfg, blocks);
      ok_pair += numerical_rank(pp.matrix) == n_t;
    }
  }

  std::vector<CheckResult> out;
  out.push_back(CheckResult::make("rank.joint_channel_deficiency", ok_deficiency, n_draws, 0.0));
  out.push_back(CheckResult::make("rank.channel_sum", ok_sum, n_draws, 0.0));
  out.push_back(CheckResult::make("rank.stacked_eve", ok_stacked, n_draws, 0.0));
  if (m >= 3) out.push_back(CheckResult::make("rank.pairwise_pilots", ok_pair, n_draws, 0.0));
  return out;
}

std::vector<CheckResult> eig_growth_suite(const NetworkConfig& cfg, const PilotSet& ps) {
  const double lo = std::exp2(kGrowthLowLog2);
  const double hi = lo * kDefaultPowerRatio;
  const int n_t = cfg.total_antennas();
  std::vector<CheckResult> out;
  for (int i = 0; i < cfg.m; ++i) {
    const int n_i = cfg.antennas_of(i);
    const int count = eig_growth_count(phase1_user_covariance(ps, i, lo),
                                       phase1_user_covariance(ps, i, hi));
    out.push_back(CheckResult::make("eig_growth.user_" + std::to_string(i + 1), count,
                                    n_i * (n_t - n_i), 0.0));
  }
  for (int i = 0; i < cfg.m; ++i) {
    for (int j = i + 1; j < cfg.m; ++j) {
      const int n_i = cfg.antennas_of(i);
      const int n_j = cfg.antennas_of(j);
      const int count = eig_growth_count(phase1_joint_covariance(ps, i, j, lo),
                                         phase1_joint_covariance(ps, i, j, hi));
      const int target = n_i * (n_t - n_i) + n_j * (n_t - n_j) - n_i * n_j;
      out.push_back(CheckResult::make(
          "eig_growth.joint_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), count, target, 0.0));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity suite

namespace {

void for_each_antenna_vector(int m, int n_max, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(m), 1);
  while (true) {
    f(v);
    std::size_t k = 0;
    while (k < v.size() && v[k] == n_max) v[k++] = 1;
    if (k == v.size()) return;
    ++v[k];
  }
}

// Every ordered pair of every network on the grid.
void for_each_scenario(const IdentityGrid& g, const std::function<void(const DofScenario&)>& f) {
  for (int m = g.m_min; m <= g.m_max; ++m) {
    for_each_antenna_vector(m, g.n_max, [&](const std::vector<int>& ant) {
      for (int ne = 0; ne <= g.n_eve_max; ++ne) {
        for (int k2 = 0; k2 <= g.k2_max; ++k2) {
          const NetworkConfig cfg = NetworkConfig::make(ant, ne, k2);
          for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
              if (i != j) f(DofScenario{cfg, i, j});
            }
          }
        }
      }
    });
  }
}

DofScenario symmetric_scenario(int m, int n, int ne, int k2) {
  return DofScenario{NetworkConfig::symmetric(m, n, ne, k2), 0, 1};
}

int symmetric_lower(int m, int n, int k2) {
  if (m == 2) return 2 * n * min(n, k2);
  if (m == 3) return n * pos(2 * min(n, k2) - k2);
  return 0;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Family {
  std::string name;
  std::function<int(const IdentityGrid&)> violations;
};

int count_gap(const IdentityGrid& g, int shift) {
  int bad = 0;
  for_each_scenario(g, [&](const DofScenario& s) {
    bad += dof_phase2_upper(s) - dof_phase2_lower(s) != dof_gap(s) + shift;
  });
  return bad;
}

const std::vector<Family>& families() {
  static const std::vector<Family> f = {
      {"identity.gap", [](const IdentityGrid& g) { return count_gap(g, 0); }},
      {"identity.decomposition",
       [](const IdentityGrid& g) {
         int bad = 0;
         for_each_scenario(g, [&](const DofScenario& s) {
           bad += dof_phase2_lower(s) != dof_cij(s) - dof_leakage(s);
         });
         return bad;
       }},
      {"identity.freedom_oracle",
       [](const IdentityGrid& g) {
         int bad = 0;
         for_each_scenario(g, [&](const DofScenario& s) {
           const EntropyTerms t = dof_entropy_terms(s);
           bad += freedom_count_oracle(FreedomTerm::yi_given_hi, s) != t.h_yi_given_hi;
           bad += freedom_count_oracle(FreedomTerm::ye_given_hep, s) != t.h_ye_given_hep;
           bad += freedom_count_oracle(FreedomTerm::joint_i_e, s) != t.h_joint_i_e;
           bad += freedom_count_oracle(FreedomTerm::joint_i_j_e, s) != t.h_joint_i_j_e;
         });
         for (int n1 = 1; n1 <= g.two_user_n_max; ++n1) {
           for (int n2 = n1; n2 <= g.two_user_n_max; ++n2) {
             for (int ne = 0; ne <= g.two_user_n_eve_max; ++ne) {
               for (int k = n2; k <= g.two_user_k_max; ++k) {
                 const TwoUserModifiedConfig c{n1, n2, k, ne};
                 const ModifiedDof d = dof_modified_two_user(c);
                 bad += freedom_count_oracle(FreedomTerm::modified_term2, c) != d.term2;
                 bad += freedom_count_oracle(FreedomTerm::modified_term3, c) != d.term3;
                 bad += freedom_count_oracle(FreedomTerm::modified_term4, c) != d.term4;
                 bad += freedom_count_oracle(FreedomTerm::modified_joint_all, c) != d.joint_all;
               }
             }
           }
         }
         return bad;
       }},
      {"identity.upper_symmetry",
       [](const IdentityGrid& g) {
         int bad = 0;
         for_each_scenario(g, [&](const DofScenario& s) {
           bad += dof_phase2_upper(s) != dof_phase2_upper(s.swapped());
         });
         return bad;
       }},
      {"identity.symmetric_closed_form",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int m = g.m_min; m <= g.m_max; ++m) {
           for (int n = 1; n <= g.n_max; ++n) {
             for (int ne = m * n; ne <= std::max(g.n_eve_max, m * n); ++ne) {
               for (int k2 = 0; k2 <= g.k2_max; ++k2) {
                 const DofScenario s = symmetric_scenario(m, n, ne, k2);
                 bad += dof_phase2_lower_plus(s) != symmetric_lower(m, n, k2);
                 // The upper bound meets these values for M = 2, for M >= 4 and
                 // for M = 3 with K_2 <= N.
                 if (m != 3 || k2 <= n) bad += dof_phase2_upper(s) != symmetric_lower(m, n, k2);
               }
             }
           }
         }
         return bad;
       }},
      {"identity.symmetric_large_m",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n = 1; n <= g.n_max; ++n) {
           for (int ne = 0; ne <= g.n_eve_max; ++ne) {
             const int m_lo = 4 + ceil_div(ne, n);
             for (int m = m_lo; m <= m_lo + 2; ++m) {
               for (int k2 = 0; k2 <= g.k2_max; ++k2) {
                 const DofScenario s = symmetric_scenario(m, n, ne, k2);
                 bad += dof_phase2_lower(s) != 0;
                 bad += dof_phase2_upper(s) != 0;
               }
             }
           }
         }
         return bad;
       }},
      {"identity.symmetric_k2_eq_n",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n = 1; n <= g.n_max; ++n) {
           for (int ne = 0; ne <= g.n_eve_max; ++ne) {
             const DofScenario s2 = symmetric_scenario(2, n, ne, n);
             const DofScenario s3 = symmetric_scenario(3, n, ne, n);
             bad += dof_phase2_lower(s2) != 2 * n * n;
             bad += dof_phase2_upper(s2) != 2 * n * n;
             bad += dof_phase2_lower(s3) != n * n;
             bad += dof_phase2_upper(s3) != n * n;
           }
         }
         return bad;
       }},
      {"identity.symmetric_gap_table",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n = 1; n <= g.n_max; ++n) {
           for (int ne = 0; ne <= g.n_eve_max; ++ne) {
             for (int m = 2; m <= std::max(g.m_max, 6 + ceil_div(ne, n)); ++m) {
               for (int k2 = 0; k2 <= g.k2_max; ++k2) {
                 const DofScenario s = symmetric_scenario(m, n, ne, k2);
                 const int dk2 = pos(k2 - n);
                 int expected = 0;
                 if (m == 3) expected = dk2 * min(ne, n);
                 if (m >= 4) expected = dk2 * (min(ne, (m - 2) * n) - min(ne, (m - 4) * n));
                 if (m == 4) bad += expected != dk2 * min(ne, 2 * n);
                 if (m >= 4 + ceil_div(ne, n)) bad += expected != 0;
                 bad += dof_gap(s) != expected;
               }
             }
           }
         }
         return bad;
       }},
      {"identity.two_user_original",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n1 = 1; n1 <= g.two_user_n_max; ++n1) {
           for (int n2 = n1; n2 <= g.two_user_n_max; ++n2) {
             for (int ne = 0; ne <= g.n_eve_max; ++ne) {
               for (int k2 = 0; k2 <= g.k2_max; ++k2) {
                 const DofScenario s{NetworkConfig::make({n1, n2}, ne, k2), 0, 1};
                 const int v = dof_two_user_original(n1, n2, ne, k2);
                 bad += dof_phase2_lower(s) != v;
                 bad += dof_phase2_upper(s) != v;
                 bad += dof_gap(s) != 0;
                 bad += dof_gap(s.swapped()) != pos(k2 - n1) * min(ne, n2 - n1);
               }
             }
           }
         }
         return bad;
       }},
      {"identity.modified_up_and_low",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n1 = 1; n1 <= g.two_user_n_max; ++n1) {
           for (int n2 = n1; n2 <= g.two_user_n_max; ++n2) {
             for (int ne = 0; ne <= g.two_user_n_eve_max; ++ne) {
               for (int k = n2; k <= g.two_user_k_max; ++k) {
                 const TwoUserModifiedConfig c{n1, n2, k, ne};
                 const ModifiedDof d = dof_modified_two_user(c);
                 bad += d.upper != d.lower_12;
                 bad += d.lower_12 - d.lower_21 < min(ne, n2 - n1) * pos(k - n1 - n2);
                 bad += d.lower_12 != modified_lower_branch(region_of(n1, n2, ne), c);
                 bad += d.term1 != n1 * (2 * k - n1 - n2);
               }
             }
           }
         }
         return bad;
       }},
      {"identity.modified_minus_original",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n1 = 1; n1 <= g.two_user_n_max; ++n1) {
           for (int n2 = n1; n2 <= g.two_user_n_max; ++n2) {
             for (int ne = 0; ne <= g.two_user_n_eve_max; ++ne) {
               for (int k = n2; k <= g.two_user_k_max; ++k) {
                 const int diff = dof_modified_two_user({n1, n2, k, ne}).lower_12 -
                                  dof_two_user_original(n1, n2, ne, k - n2);
                 bad += diff != n1 * (n2 - n1);
               }
             }
           }
         }
         return bad;
       }},
      {"identity.region_boundaries",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int n1 = 1; n1 <= g.two_user_n_max; ++n1) {
           for (int n2 = n1; n2 <= g.two_user_n_max; ++n2) {
             const int at_c1_c2 = n2 - n1;
             const int at_c2_c3 = n1 + n2;
             for (int k2 = 0; k2 <= g.k2_max; ++k2) {
               bad += two_user_original_branch(Region::c1, n1, n2, at_c1_c2, k2) !=
                      two_user_original_branch(Region::c2, n1, n2, at_c1_c2, k2);
               bad += two_user_original_branch(Region::c2, n1, n2, at_c2_c3, k2) !=
                      two_user_original_branch(Region::c3, n1, n2, at_c2_c3, k2);
             }
             for (int k = n2; k <= g.two_user_k_max; ++k) {
               const TwoUserModifiedConfig a{n1, n2, k, at_c1_c2};
               const TwoUserModifiedConfig b{n1, n2, k, at_c2_c3};
               bad += modified_lower_branch(Region::c1, a) != modified_lower_branch(Region::c2, a);
               bad += modified_lower_branch(Region::c2, b) != modified_lower_branch(Region::c3, b);
             }
           }
         }
         return bad;
       }},
      {"identity.monotonicity",
       [](const IdentityGrid& g) {
         int bad = 0;
         for_each_scenario(g, [&](const DofScenario& s) {
           if (s.n_e() == g.n_eve_max) return;
           NetworkConfig more = s.cfg;
           ++more.n_eve;
           bad += dof_phase2_lower(DofScenario{more, s.i, s.j}) > dof_phase2_lower(s);
         });
         for (int n1 = 1; n1 <= g.two_user_n_max; ++n1) {
           for (int n2 = n1; n2 <= g.two_user_n_max; ++n2) {
             for (int ne = 0; ne < g.n_eve_max; ++ne) {
               for (int k2 = 0; k2 < g.k2_max; ++k2) {
                 const int v = dof_two_user_original(n1, n2, ne, k2);
                 bad += dof_two_user_original(n1, n2, ne + 1, k2) > v;
                 bad += dof_two_user_original(n1, n2, ne, k2 + 1) < v;
               }
             }
             for (int ne = 0; ne < g.two_user_n_eve_max; ++ne) {
               for (int k = n2; k < g.two_user_k_max; ++k) {
                 const int v = dof_modified_two_user({n1, n2, k, ne}).lower_12;
                 bad += dof_modified_two_user({n1, n2, k, ne + 1}).lower_12 > v;
                 bad += dof_modified_two_user({n1, n2, k + 1, ne}).lower_12 < v;
               }
             }
           }
         }
         return bad;
       }},
      {"identity.pairwise",
       [](const IdentityGrid& g) {
         int bad = 0;
         for (int ni = 1; ni <= g.n_max; ++ni) {
           for (int nj = 1; nj <= g.n_max; ++nj) {
             for (int ne = 0; ne <= g.n_eve_max; ++ne) {
               for (int k2 = 0; k2 <= g.k2_max; ++k2) {
                 const PairwiseDof d = dof_pairwise(ni, nj, ne, k2);
                 bad += d.upper - d.lower != d.gap;
                 bad += d.upper != dof_pairwise(nj, ni, ne, k2).upper;
                 if (ni == nj) {
                   bad += d.lower != (2 * ni - min(ne, 2 * ni)) * k2;
                   bad += d.upper != d.lower;
                 }
               }
             }
           }
         }
         return bad;
       }},
  };
  return f;
}

}  // namespace

const std::vector<std::string>& identity_manifest() {
  static const std::vector<std::string> names = {
      "identity.gap",
      "identity.decomposition",
      "identity.freedom_oracle",
      "identity.upper_symmetry",
      "identity.symmetric_closed_form",
      "identity.symmetric_large_m",
      "identity.symmetric_k2_eq_n",
      "identity.symmetric_gap_table",
      "identity.two_user_original",
      "identity.modified_up_and_low",
      "identity.modified_minus_original",
      "identity.region_boundaries",
      "identity.monotonicity",
      "identity.pairwise",
  };
  return names;
}

std::vector<CheckResult> identity_suite(const IdentityGrid& grid) {
  std::vector<CheckResult> out;
  for (const auto& f : families()) {
    out.push_back(CheckResult::make(f.name, f.violations(grid), 0.0, 0.0));
  }
  return out;
}

CheckResult tampered_gap_identity(const IdentityGrid& grid) {
  return CheckResult::make("identity.gap_tampered", count_gap(grid, 1), 0.0, 0.0, true);
}

// ---------------------------------------------------------------------------

ComparisonTable compare_schemes(const NetworkConfig& cfg, int k2) {
  const auto v = validate_config(cfg);
  if (!v.empty()) throw std::invalid_argument("invalid config: " + v.front());
  if (k2 < 0) throw std::invalid_argument("K_2 < 0");
  NetworkConfig c = cfg;
  c.k2 = k2;
  const DofScenario s = DofScenario::make(c, 0, 1);
  const int n_i = s.n_i();
  const int n_j = s.n_j();
  const int phase1 = dof_phase1(n_i, n_j);

  auto row = [](std::string name, int p1, int p2, int slots1, int slots2) {
    return ComparisonRow{std::move(name), p1, p2, p1 + pos(p2), slots1, slots2};
  };

  ComparisonTable t;
  t.rows.push_back(row("all_user", phase1,
                       std::max(dof_phase2_lower_plus(s), dof_phase2_lower_plus(s.swapped())),
                       c.k1, k2));
  if (c.m >= 3) {
    const int sessions = c.m * (c.m - 1) / 2;
    if (k2 % sessions != 0) {
      throw std::invalid_argument("K_2 = " + std::to_string(k2) + " is not divisible by P_0 = " +
                                  std::to_string(sessions));
    }
    const int k2_session = k2 / sessions;
    t.rows.push_back(row("pairwise", phase1, dof_pairwise(n_i, n_j, c.n_eve, k2_session).upper,
                         sessions * c.max_antennas(), k2));
  }
  if (c.m == 2) {
    const int n1 = min(n_i, n_j);
    const int n2 = std::max(n_i, n_j);
    const TwoUserModifiedConfig mc{n1, n2, k2 + n2, c.n_eve};
    t.rows.push_back(row("modified_two_user", phase1, dof_modified_two_user(mc).lower_12, n2, k2));
  }
  return t;
}

}  // namespace anece
