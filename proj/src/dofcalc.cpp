#include "anece/dofcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace anece {

using std::min;

DofScenario DofScenario::make(const NetworkConfig& cfg, int i, int j) {
  const auto v = validate_config(cfg);
  if (!v.empty()) throw std::invalid_argument("invalid config: " + v.front());
  if (i == j || i < 0 || j < 0 || i >= cfg.m || j >= cfg.m) {
    throw std::invalid_argument("user pair out of range or not distinct");
  }
  return DofScenario{cfg, i, j};
}

int dof_phase1(int n_i, int n_j) {
  if (n_i < 1 || n_j < 1) throw std::invalid_argument("dof_phase1: antenna count < 1");
  return n_i * n_j;
}

int dof_cij(const DofScenario& s) {
  const int ni = s.n_i();
  const int nj = s.n_j();
  const int nt = s.n_t();
  return s.k2() * (min(ni, nt - ni) + min(nj, nt - nj) - min(ni + nj, nt - ni - nj));
}

EntropyTerms dof_entropy_terms(const DofScenario& s) {
  const int ni = s.n_i();
  const int nj = s.n_j();
  const int nt = s.n_t();
  const int ne = s.n_e();
  const int k2 = s.k2();
  const int dk2 = s.delta_k2();
  const int alpha = ne * min(s.n_min(), k2);

  EntropyTerms t;
  t.h_yi_given_hi = min(ni, nt - ni) * k2;
  t.h_ye_given_hep = alpha + min(ne, nt) * dk2;
  t.h_joint_i_e = t.h_yi_given_hi + alpha + dk2 * min(ne, pos(nt - 2 * ni));
  t.h_joint_i_j_e = k2 * min(ni, nt - ni - nj) + k2 * min(nj, pos(nt - 2 * ni - nj)) + alpha +
                    dk2 * min(ne, pos(nt - 2 * ni - 2 * nj));
  return t;
}

int dof_leakage(const DofScenario& s) {
  const EntropyTerms t = dof_entropy_terms(s);
  return t.h_yi_given_hi + t.h_ye_given_hep - t.h_joint_i_e;
}

int dof_phase2_lower(const DofScenario& s) {
  const int ni = s.n_i();
  const int nj = s.n_j();
  const int nt = s.n_t();
  const int ne = s.n_e();
  const int k2 = s.k2();
  const int dk2 = s.delta_k2();
  return k2 * min(nj, nt - nj) + k2 * min(ni, nt - ni) + dk2 * min(ne, pos(nt - 2 * ni)) -
         k2 * min(ni + nj, nt - ni - nj) - dk2 * min(ne, nt);
}

int dof_phase2_lower_plus(const DofScenario& s) { return pos(dof_phase2_lower(s)); }

int dof_phase2_upper(const DofScenario& s) {
  const int ni = s.n_i();
  const int nj = s.n_j();
  const int nt = s.n_t();
  const int ne = s.n_e();
  const int k2 = s.k2();
  const int dk2 = s.delta_k2();
  return k2 * min(ni, nt - ni) + k2 * min(nj, nt - nj) + dk2 * min(ne, pos(nt - 2 * ni)) +
         dk2 * min(ne, pos(nt - 2 * nj)) - dk2 * min(ne, nt) -
         dk2 * min(ne, pos(nt - 2 * ni - 2 * nj)) - k2 * min(ni, nt - ni - nj) -
         k2 * min(nj, pos(nt - 2 * ni - nj));
}

int dof_gap(const DofScenario& s) {
  const int ni = s.n_i();
  const int nj = s.n_j();
  const int nt = s.n_t();
  const int ne = s.n_e();
  const int k2 = s.k2();
  const int dk2 = s.delta_k2();
  return dk2 * min(ne, pos(nt - 2 * nj)) + k2 * min(ni + nj, nt - ni - nj) -
         k2 * min(ni, nt - ni - nj) - k2 * min(nj, pos(nt - 2 * ni - nj)) -
         dk2 * min(ne, pos(nt - 2 * ni - 2 * nj));
}

Region region_of(int n1, int n2, int n_eve) {
  if (n_eve <= n2 - n1) return Region::c1;
  if (n_eve <= n1 + n2) return Region::c2;
  return Region::c3;
}

namespace {
void check_two_user(int n1, int n2, int n_eve) {
  if (n1 < 1 || n2 < n1) throw std::invalid_argument("two-user formulas need 1 <= N_1 <= N_2");
  if (n_eve < 0) throw std::invalid_argument("N_E < 0");
}
}  // namespace

int two_user_original_branch(Region r, int n1, int n2, int n_eve, int k2) {
  check_two_user(n1, n2, n_eve);
  if (k2 < 0) throw std::invalid_argument("K_2 < 0");
  const int dk2 = pos(k2 - n1);
  switch (r) {
    case Region::c1: return 2 * k2 * n1;
    case Region::c2: return 2 * k2 * n1 - dk2 * (n_eve - (n2 - n1));
    case Region::c3: return 2 * min(n1, k2) * n1;
  }
  throw std::logic_error("unreachable");
}

int dof_two_user_original(int n1, int n2, int n_eve, int k2) {
  return two_user_original_branch(region_of(n1, n2, n_eve), n1, n2, n_eve, k2);
}

PairwiseDof dof_pairwise(int n_ip, int n_jp, int n_eve, int k2_session) {
  if (n_ip < 1 || n_jp < 1 || n_eve < 0 || k2_session < 0) {
    throw std::invalid_argument("dof_pairwise: bad arguments");
  }
  PairwiseDof d;
  d.lower = (min(n_ip, n_jp) - min(n_eve, n_ip + n_jp) + min(n_eve + n_ip, n_jp)) * k2_session;
  d.upper = (-min(n_eve, n_ip + n_jp) + min(n_eve + n_ip, n_jp) + min(n_eve + n_jp, n_ip)) *
            k2_session;
  d.gap = n_ip <= n_jp ? 0 : (min(n_eve + n_jp, n_ip) - n_jp) * k2_session;
  return d;
}

ModifiedDof dof_modified_two_user(const TwoUserModifiedConfig& cfg) {
  const auto v = validate_config(cfg);
  if (!v.empty()) throw std::invalid_argument("invalid config: " + v.front());
  const int n1 = cfg.n1;
  const int n2 = cfg.n2;
  const int k = cfg.k_total;
  const int ne = cfg.n_eve;
  const int nt = n1 + n2;
  const int dn = n2 - n1;
  const int tail = pos(k - nt);
  const int alpha = ne * min(n2, k - n1);

  ModifiedDof d;
  d.term1 = n1 * (k - n1) + n1 * (k - n2);
  d.term2 = alpha + min(ne, nt) * tail;
  d.term3 = n1 * (k - n2) + alpha + min(ne, dn) * tail;
  d.term4 = n1 * (k - n1) + alpha;
  d.joint_all = alpha;
  d.lower_12 = n1 * (2 * k - nt) + min(ne, dn) * tail - min(ne, nt) * tail;
  d.lower_21 = n1 * (2 * k - nt) - min(ne, nt) * tail;
  d.upper = -d.term2 + d.term3 + d.term4 - d.joint_all;
  return d;
}

int modified_lower_branch(Region r, const TwoUserModifiedConfig& cfg) {
  check_two_user(cfg.n1, cfg.n2, cfg.n_eve);
  const int n1 = cfg.n1;
  const int k = cfg.k_total;
  const int nt = cfg.n1 + cfg.n2;
  switch (r) {
    case Region::c1: return n1 * (2 * k - nt);
    case Region::c2: return n1 * (2 * k - nt) - (cfg.n_eve - cfg.antenna_gap()) * pos(k - nt);
    case Region::c3: return n1 * (2 * k - nt - pos(2 * k - 2 * nt));
  }
  throw std::logic_error("unreachable");
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::all_user: return "all_user";
    case Scheme::pairwise: return "pairwise";
    case Scheme::modified_two_user: return "modified_two_user";
  }
  throw std::logic_error("unreachable");
}

Scheme scheme_from_string(std::string_view name) {
  if (name == "all_user") return Scheme::all_user;
  if (name == "pairwise") return Scheme::pairwise;
  if (name == "modified_two_user") return Scheme::modified_two_user;
  throw std::invalid_argument("unknown scheme \"" + std::string(name) + "\"");
}

int dof_total(Scheme scheme, const SchemeParams& params) {
  switch (scheme) {
    case Scheme::all_user: {
      const auto* s = std::get_if<DofScenario>(&params);
      if (!s) throw std::invalid_argument("dof_total: all_user needs a DofScenario");
      return dof_phase1(s->n_i(), s->n_j()) +
             std::max(dof_phase2_lower_plus(*s), dof_phase2_lower_plus(s->swapped()));
    }
    case Scheme::pairwise: {
      const auto* p = std::get_if<PairwiseParams>(&params);
      if (!p) throw std::invalid_argument("dof_total: pairwise needs PairwiseParams");
      return dof_phase1(p->n_ip, p->n_jp) +
             pos(dof_pairwise(p->n_ip, p->n_jp, p->n_eve, p->k2_session).upper);
    }
    case Scheme::modified_two_user: {
      const auto* c = std::get_if<TwoUserModifiedConfig>(&params);
      if (!c) throw std::invalid_argument("dof_total: modified_two_user needs a TwoUserModifiedConfig");
      return dof_phase1(c->n1, c->n2) + pos(dof_modified_two_user(*c).lower_12);
    }
  }
  throw std::invalid_argument("dof_total: unknown scheme");
}

}  // namespace anece
