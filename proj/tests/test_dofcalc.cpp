#include "doctest.h"

#include "anece/dofcalc.hpp"
#include "anece/freedom.hpp"

using namespace anece;

namespace {

DofScenario sym(int m, int n, int n_eve, int k2) {
  return DofScenario::make(NetworkConfig::symmetric(m, n, n_eve, k2), 0, 1);
}

DofScenario net(std::vector<int> antennas, int n_eve, int k2) {
  return DofScenario::make(NetworkConfig::make(std::move(antennas), n_eve, k2), 0, 1);
}

}  // namespace

TEST_CASE("phase 1") {
  CHECK(dof_phase1(1, 1) == 1);
  CHECK(dof_phase1(2, 3) == 6);
  CHECK(dof_phase1(4, 4) == 16);
}

TEST_CASE("C_ij") {
  CHECK(dof_cij(net({2, 2}, 1, 3)) == 12);
  CHECK(dof_cij(sym(3, 2, 1, 2)) == 4);
  CHECK(dof_cij(sym(3, 2, 1, 0)) == 0);
}

TEST_CASE("entropy terms and leakage") {
  const auto t = dof_entropy_terms(net({2, 2}, 5, 3));
  CHECK(t.h_yi_given_hi == 6);
  CHECK(t.h_ye_given_hep == 14);
  CHECK(t.h_joint_i_e == 16);
  CHECK(dof_entropy_terms(sym(3, 2, 4, 3)).h_joint_i_j_e == 14);
  CHECK(dof_entropy_terms(sym(3, 2, 5, 2)).h_ye_given_hep == 10);

  CHECK(dof_leakage(net({2, 2}, 5, 3)) == 4);
  CHECK(dof_leakage(net({2, 2}, 5, 0)) == 0);
  CHECK(dof_leakage(sym(3, 2, 0, 3)) == 0);
}

TEST_CASE("phase 2 bounds") {
  for (int ne = 0; ne <= 10; ++ne) CHECK(dof_phase2_lower(sym(3, 2, ne, 2)) == 4);
  CHECK(dof_phase2_lower(sym(3, 2, 4, 3)) == 4);
  CHECK(dof_phase2_lower(net({2, 2}, 5, 3)) == 8);
  CHECK(dof_phase2_upper(sym(3, 2, 4, 3)) == 6);
  CHECK(dof_phase2_upper(sym(3, 2, 4, 2)) == 4);
  CHECK(dof_phase2_lower_plus(sym(6, 2, 12, 2)) == 0);
}

TEST_CASE("gap") {
  CHECK(dof_gap(sym(3, 2, 4, 3)) == 2);
  for (int n = 1; n <= 3; ++n) {
    for (int k2 = 0; k2 <= n; ++k2) {
      for (int ne = 0; ne <= 8; ++ne) CHECK(dof_gap(sym(4, n, ne, k2)) == 0);
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int ne = 0; ne <= 8; ++ne) {
      const int m = 4 + (ne + n - 1) / n;
      for (int k2 = 0; k2 <= 6; ++k2) CHECK(dof_gap(sym(m, n, ne, k2)) == 0);
    }
  }
}

TEST_CASE("lower bound over M") {
  const std::vector<int> expected{8, 4, 0, 0, 0};
  for (int m = 2; m <= 6; ++m) {
    CHECK(dof_phase2_lower_plus(sym(m, 2, 12, 2)) == expected[static_cast<std::size_t>(m - 2)]);
  }
}

TEST_CASE("two-user original") {
  CHECK(dof_two_user_original(2, 3, 6, 4) == 8);
  CHECK(dof_two_user_original(2, 3, 1, 4) == 16);
  CHECK(dof_two_user_original(2, 3, 4, 4) == 10);
  const std::vector<int> sweep{16, 16, 14, 12, 10, 8, 8, 8, 8};
  for (int ne = 0; ne <= 8; ++ne) {
    CHECK(dof_two_user_original(2, 3, ne, 4) == sweep[static_cast<std::size_t>(ne)]);
    CHECK(dof_two_user_original(2, 3, ne, 4) == dof_phase2_lower(net({2, 3}, ne, 4)));
  }
  CHECK(region_of(2, 3, 1) == Region::c1);
  CHECK(region_of(2, 3, 3) == Region::c2);
  CHECK(region_of(2, 3, 6) == Region::c3);
}

TEST_CASE("pairwise") {
  const auto a = dof_pairwise(2, 2, 1, 2);
  CHECK(a.lower == 6);
  CHECK(a.upper == 6);
  for (int ne = 4; ne <= 9; ++ne) CHECK(dof_pairwise(2, 2, ne, 3).upper == 0);
  const auto b = dof_pairwise(3, 2, 2, 1);
  CHECK(b.lower == 2);
  CHECK(b.upper == 3);
  CHECK(b.gap == 1);
  CHECK(dof_pairwise(2, 3, 2, 1).gap == 0);
}

TEST_CASE("modified two-user") {
  const auto d = dof_modified_two_user({2, 3, 7, 6});
  CHECK(d.lower_12 == 10);
  CHECK(d.term1 == 18);
  CHECK(d.term3 == 28);
  CHECK(d.upper == d.lower_12);
  CHECK(dof_modified_two_user({2, 3, 7, 1}).lower_12 == 18);
  const std::vector<int> sweep{2, 6, 10, 10, 10, 10};
  for (int k = 3; k <= 8; ++k) {
    CHECK(dof_modified_two_user({2, 3, k, 6}).lower_12 == sweep[static_cast<std::size_t>(k - 3)]);
  }
  for (int n = 1; n <= 3; ++n) {
    for (int ne = 0; ne <= 8; ++ne) {
      for (int k2 = 1; k2 <= 5; ++k2) {
        CHECK(dof_modified_two_user({n, n, n + k2, ne}).lower_12 == dof_two_user_original(n, n, ne, k2));
      }
    }
  }
}

TEST_CASE("totals") {
  CHECK(dof_total(Scheme::modified_two_user, TwoUserModifiedConfig{2, 3, 7, 6}) == 16);
  CHECK(dof_total(Scheme::all_user, sym(3, 2, 4, 2)) == 8);
  CHECK(dof_total(Scheme::pairwise, PairwiseParams{2, 2, 4, 1}) == 4);
  CHECK(dof_total(Scheme::pairwise, PairwiseParams{2, 2, 7, 3}) == 4);
  CHECK_THROWS_AS(dof_total(Scheme::pairwise, sym(3, 2, 4, 2)), std::invalid_argument);
}

TEST_CASE("scheme names") {
  for (Scheme s : {Scheme::all_user, Scheme::pairwise, Scheme::modified_two_user}) {
    CHECK(scheme_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(scheme_from_string("both"), std::invalid_argument);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(DofScenario::make(NetworkConfig::make({1, 1}, 1, 1), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(DofScenario::make(NetworkConfig::make({1, 1}, 1, 1), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(DofScenario::make(NetworkConfig::make({1}, 1, 1), 0, 1), std::invalid_argument);
}

TEST_CASE("freedom oracle examples") {
  CHECK(freedom_count_oracle(FreedomTerm::ye_given_hep, net({2, 2}, 5, 3)) == 14);
  CHECK(freedom_count_oracle(FreedomTerm::joint_i_j_e, sym(3, 2, 4, 3)) == 14);
  CHECK(freedom_count_oracle(FreedomTerm::modified_term3, TwoUserModifiedConfig{2, 3, 7, 6}) == 28);
  CHECK_THROWS_AS(freedom_count_oracle(FreedomTerm::modified_term2, sym(3, 2, 4, 3)), std::invalid_argument);
  CHECK_THROWS_AS(freedom_count_oracle(FreedomTerm::joint_i_e, TwoUserModifiedConfig{2, 3, 7, 6}),
                  std::invalid_argument);
  CHECK(freedom_term_from_string(to_string(FreedomTerm::joint_i_e)) == FreedomTerm::joint_i_e);
}

TEST_CASE("freedom oracle agrees with the closed forms") {
  const std::vector<std::vector<int>> nets{{1, 1}, {2, 3}, {3, 1}, {1, 2, 3}, {2, 2, 2}, {3, 1, 2, 1}};
  for (const auto& ant : nets) {
    for (int ne = 0; ne <= 10; ++ne) {
      for (int k2 = 0; k2 <= 6; ++k2) {
        const auto cfg = NetworkConfig::make(ant, ne, k2);
        for (int i = 0; i < cfg.m; ++i) {
          for (int j = 0; j < cfg.m; ++j) {
            if (i == j) continue;
            const auto s = DofScenario::make(cfg, i, j);
            const auto t = dof_entropy_terms(s);
            CHECK(freedom_count_oracle(FreedomTerm::yi_given_hi, s) == t.h_yi_given_hi);
            CHECK(freedom_count_oracle(FreedomTerm::ye_given_hep, s) == t.h_ye_given_hep);
            CHECK(freedom_count_oracle(FreedomTerm::joint_i_e, s) == t.h_joint_i_e);
            CHECK(freedom_count_oracle(FreedomTerm::joint_i_j_e, s) == t.h_joint_i_j_e);
          }
        }
      }
    }
  }
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = n1; n2 <= 4; ++n2) {
      for (int k = n2; k <= 10; ++k) {
        for (int ne = 0; ne <= 10; ++ne) {
          const TwoUserModifiedConfig c{n1, n2, k, ne};
          const auto d = dof_modified_two_user(c);
          CHECK(freedom_count_oracle(FreedomTerm::modified_term2, c) == d.term2);
          CHECK(freedom_count_oracle(FreedomTerm::modified_term3, c) == d.term3);
          CHECK(freedom_count_oracle(FreedomTerm::modified_term4, c) == d.term4);
          CHECK(freedom_count_oracle(FreedomTerm::modified_joint_all, c) == d.joint_all);
        }
      }
    }
  }
}

TEST_CASE("count_freedom") {
  FreedomPlan p;
  p.free = 4;
  p.users = {{2, 3}};
  p.n_eve = 3;
  p.eve_columns = 3;
  CHECK(count_freedom(p) == 6 + 6);
}
