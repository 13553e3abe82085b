#include "anece/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "anece/channel.hpp"
#include "anece/linalg.hpp"
#include "anece/random.hpp"

namespace anece {

namespace {

// sigma2 * P_(i)^T P_(i)^* + I_{K_1}
CMatrix pilot_gram(const PilotSet& ps, int i, double sigma2) {
  const CMatrix others = ps.without(i);
  return sigma2 * others.transpose() * others.conjugate() +
         CMatrix::Identity(ps.length(), ps.length());
}

void check_pair(int users, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= users || j >= users) {
    throw std::invalid_argument("user pair out of range or not distinct");
  }
}

CMatrix gram_plus_identity(const CMatrix& h, double sigma2) {
  return sigma2 * h * h.adjoint() + CMatrix::Identity(h.rows(), h.rows());
}

}  // namespace

CMatrix phase1_user_covariance(const PilotSet& ps, int i, double sigma2) {
  const Index n_i = ps.blocks.at(static_cast<std::size_t>(i)).rows();
  return kron(pilot_gram(ps, i, sigma2), CMatrix::Identity(n_i, n_i));
}

CMatrix phase1_joint_covariance(const PilotSet& ps, int i, int j, double sigma2) {
  check_pair(ps.users(), i, j);
  const CMatrix& p_i = ps.blocks[static_cast<std::size_t>(i)];
  const CMatrix& p_j = ps.blocks[static_cast<std::size_t>(j)];
  const Index n_j = p_j.rows();
  const CMatrix top_left = phase1_user_covariance(ps, i, sigma2);
  const CMatrix bottom_right = kron(CMatrix::Identity(n_j, n_j), pilot_gram(ps, j, sigma2));
  const CMatrix cross = sigma2 * kron(p_j.transpose(), p_i.conjugate());

  const Index a = top_left.rows();
  const Index b = bottom_right.rows();
  CMatrix r(a + b, a + b);
  r.topLeftCorner(a, a) = top_left;
  r.bottomRightCorner(b, b) = bottom_right;
  r.topRightCorner(a, b) = cross;
  r.bottomLeftCorner(b, a) = cross.adjoint();
  return r;
}

double phase1_skc_exact(const NetworkConfig& cfg, const PilotSet& ps, int i, int j, double sigma2) {
  check_pair(cfg.m, i, j);
  if (ps.users() != cfg.m) throw std::invalid_argument("phase1_skc_exact: pilot set mismatch");
  return logdet_hpd(phase1_user_covariance(ps, i, sigma2)) +
         logdet_hpd(phase1_user_covariance(ps, j, sigma2)) -
         logdet_hpd(phase1_joint_covariance(ps, i, j, sigma2));
}

double gaussian_linear_mi(const CMatrix& a, const CMatrix& b, double sigma2) {
  if (a.cols() != b.cols()) throw std::invalid_argument("gaussian_linear_mi: column mismatch");
  CMatrix ab(a.rows() + b.rows(), a.cols());
  ab << a, b;
  return logdet_hpd(gram_plus_identity(a, sigma2)) + logdet_hpd(gram_plus_identity(b, sigma2)) -
         logdet_hpd(gram_plus_identity(ab, sigma2));
}

double modified_phase1_mi_exact(const TwoUserModifiedConfig& cfg, const ModifiedPilotPair& pp,
                                double sigma2) {
  // vec(Y_1) = sigma (P_2^T kron I) vec(H_12), vec(Y_2^T) = sigma (I kron P_1^T) vec(H_12)
  const CMatrix a = kron(pp.p2.transpose(), CMatrix::Identity(cfg.n1, cfg.n1));
  const CMatrix b = kron(CMatrix::Identity(cfg.n2, cfg.n2), pp.p1.transpose());
  return gaussian_linear_mi(a, b, sigma2);
}

McEstimate mc_average(int n_samples, const std::function<double(std::uint64_t)>& f) {
  if (n_samples < 1) throw std::invalid_argument("n_samples < 1");
  std::vector<double> samples(static_cast<std::size_t>(n_samples));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(n_samples)));
  if (workers <= 1 || n_samples < 64) {
    for (int s = 0; s < n_samples; ++s) samples[static_cast<std::size_t>(s)] = f(static_cast<std::uint64_t>(s));
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int s = w; s < n_samples; s += workers) {
            samples[static_cast<std::size_t>(s)] = f(static_cast<std::uint64_t>(s));
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  double sum = 0.0;
  for (double v : samples) sum += v;
  const double mean = sum / n_samples;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  McEstimate out;
  out.mean = mean;
  out.std_error = n_samples > 1 ? std::sqrt(ss / (n_samples - 1) / n_samples) : 0.0;
  return out;
}

McEstimate cij_phase2_mc(const NetworkConfig& cfg, int i, int j, double sigma2, int n_samples,
                         std::uint64_t seed) {
  check_pair(cfg.m, i, j);
  if (!validate_config(cfg).empty()) throw std::invalid_argument("cij_phase2_mc: invalid config");
  const int n_i = cfg.antennas_of(i);
  const int n_j = cfg.antennas_of(j);
  return mc_average(n_samples, [&](std::uint64_t s) {
    const ChannelRealization ch = sample_channels(cfg, seed, s);
    // Sum over l outside {i, j}; the zero matrix when M = 2.
    CMatrix r_ij = CMatrix::Zero(n_i + n_j, n_i + n_j);
    for (int l = 0; l < cfg.m; ++l) {
      if (l == i || l == j) continue;
      CMatrix h(n_i + n_j, cfg.antennas_of(l));
      h << ch.h(i, l), ch.h(j, l);
      r_ij += h * h.adjoint();
    }
    const double joint = logdet_hpd(sigma2 * r_ij + CMatrix::Identity(n_i + n_j, n_i + n_j));
    return cfg.k2 * (logdet_hpd(gram_plus_identity(ch.receive_stack(i), sigma2)) +
                     logdet_hpd(gram_plus_identity(ch.receive_stack(j), sigma2)) - joint);
  });
}

McEstimate ckey0_modified_mc(const TwoUserModifiedConfig& cfg, double sigma2, int n_samples,
                             std::uint64_t seed) {
  if (!validate_config(cfg).empty()) throw std::invalid_argument("ckey0_modified_mc: invalid config");
  const std::vector<int> antennas{cfg.n1, cfg.n2};
  return mc_average(n_samples, [&](std::uint64_t s) {
    const ChannelRealization ch = sample_channels(antennas, cfg.n_eve, seed, s);
    return (cfg.k_total - cfg.n1) * logdet_hpd(gram_plus_identity(ch.h(1, 0), sigma2)) +
           (cfg.k_total - cfg.n2) * logdet_hpd(gram_plus_identity(ch.h(0, 1), sigma2));
  });
}

McEstimate entropy_cond_gaussian_mc(int m, int n, int k, double sigma2, int n_samples,
                                    std::uint64_t seed) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("entropy_cond_gaussian_mc: m, n, k >= 1");
  const double noise_bits = static_cast<double>(m) * k * std::log2(std::numbers::e * std::numbers::pi);
  McEstimate est = mc_average(n_samples, [&](std::uint64_t s) {
    Engine eng = substream(seed, "entropy", s);
    const CMatrix h = complex_gaussian(m, n, eng);
    return k * logdet_hpd(gram_plus_identity(h, sigma2));
  });
  est.mean += noise_bits;
  return est;
}

CapacityCurve trace_exact(const SnrGrid& grid, const std::function<double(double)>& value) {
  CapacityCurve c;
  c.grid = grid;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    c.values.push_back(value(grid.sigma2_at(k)));
    c.mc_stderr.push_back(0.0);
  }
  return c;
}

CapacityCurve trace_mc(const SnrGrid& grid, int n_samples,
                       const std::function<McEstimate(double)>& value) {
  CapacityCurve c;
  c.grid = grid;
  c.mc_samples = n_samples;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const McEstimate e = value(grid.sigma2_at(k));
    c.values.push_back(e.mean);
    c.mc_stderr.push_back(e.std_error);
  }
  return c;
}

}  // namespace anece
