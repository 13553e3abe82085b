#include "anece/freedom.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace anece {

int count_freedom(const FreedomPlan& plan) {
  int total = 0;
  int free = plan.free;
  for (const auto& b : plan.users) {
    for (int c = 0; c < b.columns; ++c) total += std::min(b.rows, free);
    free = std::max(free - b.rows, 0);
  }
  int unknown = plan.eve_unknown;
  for (int c = 0; c < plan.eve_columns; ++c) {
    if (unknown > 0) {
      total += plan.n_eve;
      --unknown;
    } else {
      total += std::min(plan.n_eve, free);
    }
  }
  return total;
}

namespace {

constexpr std::array<std::pair<FreedomTerm, std::string_view>, 8> kNames{{
    {FreedomTerm::yi_given_hi, "yi_given_hi"},
    {FreedomTerm::ye_given_hep, "ye_given_hep"},
    {FreedomTerm::joint_i_e, "joint_i_e"},
    {FreedomTerm::joint_i_j_e, "joint_i_j_e"},
    {FreedomTerm::modified_term2, "modified_term2"},
    {FreedomTerm::modified_term3, "modified_term3"},
    {FreedomTerm::modified_term4, "modified_term4"},
    {FreedomTerm::modified_joint_all, "modified_joint_all"},
}};

}  // namespace

FreedomTerm freedom_term_from_string(std::string_view name) {
  for (const auto& [t, n] : kNames) {
    if (n == name) return t;
  }
  throw std::invalid_argument("unknown freedom term \"" + std::string(name) + "\"");
}

std::string_view to_string(FreedomTerm t) {
  for (const auto& [term, n] : kNames) {
    if (term == t) return n;
  }
  throw std::invalid_argument("unknown freedom term");
}

int freedom_count_oracle(FreedomTerm term, const DofScenario& s) {
  const int ni = s.n_i();
  const int nj = s.n_j();
  const int nt = s.n_t();
  const int k2 = s.k2();

  FreedomPlan plan;
  plan.n_eve = s.n_e();
  plan.eve_columns = k2;
  plan.eve_unknown = s.n_min();
  switch (term) {
    case FreedomTerm::yi_given_hi:
      plan.free = nt - ni;
      plan.users = {{ni, k2}};
      plan.eve_columns = 0;
      break;
    case FreedomTerm::ye_given_hep:
      plan.free = nt;
      break;
    case FreedomTerm::joint_i_e:
      plan.free = nt - ni;
      plan.users = {{ni, k2}};
      break;
    case FreedomTerm::joint_i_j_e:
      plan.free = nt - ni - nj;
      plan.users = {{ni, k2}, {nj, k2}};
      break;
    default:
      throw std::invalid_argument("freedom_count_oracle: " + std::string(to_string(term)) +
                                  " is not an all-user term");
  }
  return count_freedom(plan);
}

int freedom_count_oracle(FreedomTerm term, const TwoUserModifiedConfig& cfg) {
  const int n1 = cfg.n1;
  const int n2 = cfg.n2;
  const int k = cfg.k_total;

  // Eve's phase-2 segment spans the K - N_1 slots after P_1; H_E,P',perp has
  // N_2 unresolved directions.
  FreedomPlan plan;
  plan.n_eve = cfg.n_eve;
  plan.eve_columns = k - n1;
  plan.eve_unknown = n2;
  switch (term) {
    case FreedomTerm::modified_term2:
      plan.free = n1 + n2;
      break;
    case FreedomTerm::modified_term3:
      plan.free = n2;  // X_2 unknown, X_1 given
      plan.users = {{n1, k - n2}};
      break;
    case FreedomTerm::modified_term4:
      plan.free = n1;  // X_1 unknown, X_2 given
      plan.users = {{n2, k - n1}};
      break;
    case FreedomTerm::modified_joint_all:
      plan.free = 0;
      break;
    default:
      throw std::invalid_argument("freedom_count_oracle: " + std::string(to_string(term)) +
                                  " is not a modified-scheme term");
  }
  return count_freedom(plan);
}

}  // namespace anece
