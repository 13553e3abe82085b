#include "doctest.h"

#include "anece/linalg.hpp"
#include "anece/model.hpp"
#include "anece/random.hpp"
#include "oracles.hpp"

using namespace anece;

TEST_CASE("logdet_hpd") {
  CHECK(logdet_hpd(CMatrix::Identity(3, 3)) == doctest::Approx(0.0));
  RMatrix d = RMatrix::Zero(2, 2);
  d.diagonal() << 2, 4;
  CHECK(logdet_hpd(d) == doctest::Approx(3.0));

  Engine eng = substream(1, "test");
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = complex_gaussian(4, 3, eng);
    const CMatrix m = a * a.adjoint() + CMatrix::Identity(4, 4);
    CHECK(logdet_hpd(m) >= 0.0);
    CHECK(logdet_hpd(m) == doctest::Approx(oracle::logdet_lu(m)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(logdet_hpd(-CMatrix::Identity(2, 2)), std::domain_error);
}

TEST_CASE("logdet_hpd of a block diagonal is additive") {
  Engine eng = substream(2, "test");
  const CMatrix a0 = complex_gaussian(3, 3, eng);
  const CMatrix b0 = complex_gaussian(2, 5, eng);
  const CMatrix a = a0 * a0.adjoint() + CMatrix::Identity(3, 3);
  const CMatrix b = b0 * b0.adjoint() + CMatrix::Identity(2, 2);
  CHECK(std::abs(logdet_hpd(a) + logdet_hpd(b) - logdet_hpd(block_diag(a, b))) < 1e-8);
}

TEST_CASE("logdet_hpd is accurate for ill-conditioned input") {
  RMatrix d = RMatrix::Zero(3, 3);
  d.diagonal() << 1e10, 1.0, 1e-0;
  Engine eng = substream(3, "test");
  const CMatrix q = complex_gaussian(3, 3, eng).householderQr().householderQ();
  const CMatrix m = q * d.cast<Complex>() * q.adjoint();
  CHECK(logdet_hpd(m) == doctest::Approx(std::log2(1e10)).epsilon(1e-8));
}

TEST_CASE("numerical_rank") {
  CHECK(numerical_rank(CMatrix::Identity(3, 3)) == 3);
  Engine eng = substream(4, "test");
  const CVector u = complex_gaussian(4, 1, eng);
  const CVector v = complex_gaussian(3, 1, eng);
  CHECK(numerical_rank(u * v.adjoint()) == 1);
  CHECK(numerical_rank(CMatrix::Zero(2, 2)) == 0);
  CHECK(numerical_rank(CMatrix(0, 3)) == 0);
  RMatrix r(2, 2);
  r << 1, 0, 0, 1e-14;
  CHECK(numerical_rank(r) == 1);
  CHECK(numerical_rank(r, 1e-16) == 2);
}

TEST_CASE("eig_growth_count examples") {
  auto diag_case = [](double s2) {
    RMatrix r = RMatrix::Zero(2, 2);
    r.diagonal() << s2 + 1, 2;
    return r;
  };
  CHECK(eig_growth_count(diag_case(std::exp2(10)), diag_case(std::exp2(20))) == 1);
  const double lo = std::exp2(10);
  CHECK(eig_growth_count(CMatrix((lo + 1) * CMatrix::Identity(4, 4)),
                         CMatrix((lo * 1024 + 1) * CMatrix::Identity(4, 4))) == 4);
  CHECK_THROWS_AS(eig_growth_count(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("eig_growth_count matches the rank of the growing part") {
  Engine eng = substream(5, "test");
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 50; ++t) {
    const int n = dim(eng);
    std::uniform_int_distribution<int> rk(0, n);
    const int r = rk(eng);
    const CMatrix b = complex_gaussian(n, r, eng);
    const double lo = std::exp2(14);
    const CMatrix r_lo = lo * b * b.adjoint() + CMatrix::Identity(n, n);
    const CMatrix r_hi = 1024 * lo * b * b.adjoint() + CMatrix::Identity(n, n);
    CHECK(eig_growth_count(r_lo, r_hi) == r);
  }
}

TEST_CASE("kron and block_diag shapes") {
  RMatrix a(1, 2);
  a << 1, 2;
  RMatrix b(2, 1);
  b << 3, 4;
  const RMatrix k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k(1, 1) == 8);
  CHECK(block_diag(a, b).rows() == 3);
}

TEST_CASE("complex_gaussian has unit total variance") {
  Engine eng = substream(6, "test");
  const CMatrix g = complex_gaussian(200, 500, eng);
  const double p = g.cwiseAbs2().mean();
  const double re = g.real().cwiseAbs2().mean();
  CHECK(p == doctest::Approx(1.0).epsilon(0.02));
  CHECK(re == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("substreams are independent of purpose and index") {
  Engine a = substream(1, "x", 0);
  Engine b = substream(1, "x", 0);
  Engine c = substream(1, "y", 0);
  Engine d = substream(1, "x", 1);
  const auto va = a();
  CHECK(va == b());
  CHECK(va != c());
  CHECK(va != d());
}
