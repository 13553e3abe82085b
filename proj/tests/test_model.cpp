#include "doctest.h"

#include "anece/model.hpp"

using namespace anece;

TEST_CASE("validate_config") {
  CHECK(validate_config(NetworkConfig::make({1, 1}, 1, 1, 1)).empty());

  const auto short_k1 = validate_config(NetworkConfig::make({2, 2, 2}, 4, 2, 3));
  REQUIRE(short_k1.size() == 1);
  CHECK(short_k1[0] == "K_1 < N_T-N_min (need >= 4)");

  const auto one_user = validate_config(NetworkConfig::make({2}, 0, 1, 1));
  REQUIRE(!one_user.empty());
  CHECK(one_user[0] == "M < 2");

  NetworkConfig bad = NetworkConfig::make({0, 2}, -1, -1, 0);
  bad.eve_noise_var = 2.0;
  const auto v = config_violations(bad);
  CHECK(v.size() == 5);
  CHECK(validate_config(bad) == validate_config(bad));
}

TEST_CASE("k1 defaults to the minimal pilot length") {
  const auto cfg = NetworkConfig::make({2, 3, 4}, 0, 1);
  CHECK(cfg.k1 == 7);
  CHECK(cfg.total_antennas() == 9);
  CHECK(cfg.min_antennas() == 2);
  CHECK(cfg.max_antennas() == 4);
}

TEST_CASE("antenna count must match M") {
  NetworkConfig cfg = NetworkConfig::make({1, 1}, 0, 1);
  cfg.m = 3;
  const auto v = config_violations(cfg);
  REQUIRE(v.size() == 1);
  CHECK(v[0].field == "antennas");
}

TEST_CASE("modified config") {
  CHECK(validate_config(TwoUserModifiedConfig{2, 3, 7, 6}).empty());
  CHECK(validate_config(TwoUserModifiedConfig{3, 2, 7, 6}) == std::vector<std::string>{"N_2 < N_1"});
  const auto v = config_violations(TwoUserModifiedConfig{2, 3, 2, 0});
  REQUIRE(v.size() == 1);
  CHECK(v[0].field == "k_total");
}

TEST_CASE("SnrGrid") {
  CHECK_THROWS_AS(SnrGrid({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SnrGrid({1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SnrGrid({3, 2, 1}), std::invalid_argument);
  const SnrGrid g = SnrGrid::default_high_snr();
  CHECK(g.size() == 7);
  CHECK(g.points().front() == 12);
  CHECK(g.sigma2_at(0) == doctest::Approx(4096.0));
}

TEST_CASE("CheckResult pass flag") {
  CHECK(CheckResult::make("a", 1.1, 1.0, 0.15).passed);
  CHECK_FALSE(CheckResult::make("a", 1.2, 1.0, 0.15).passed);
  CHECK(CheckResult::make("a", 3.0, 3.0, 0.0).passed);
}
