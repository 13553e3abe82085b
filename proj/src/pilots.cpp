#include "anece/pilots.hpp"

#include <algorithm>
#include <stdexcept>

#include "anece/linalg.hpp"
#include "anece/random.hpp"

namespace anece {

namespace {

constexpr int kMaxAttempts = 16;

std::vector<Index> row_offsets(const std::vector<CMatrix>& blocks) {
  std::vector<Index> off(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) off[i + 1] = off[i] + blocks[i].rows();
  return off;
}

// Rotates column k of q so that r(k, pivot[k]) becomes real and non-negative.
void fix_phases(CMatrix& q_p, const CMatrix& p, const std::vector<Index>& pivot) {
  const CMatrix r = q_p.adjoint() * p;
  for (Index k = 0; k < q_p.cols(); ++k) {
    const Complex d = r(k, pivot[static_cast<std::size_t>(k)]);
    if (std::abs(d) > 0.0) q_p.col(k) *= d / std::abs(d);
  }
}

}  // namespace

PilotSet PilotSet::from_blocks(std::vector<CMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("PilotSet: no blocks");
  const Index len = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != len) throw std::invalid_argument("PilotSet: blocks differ in length");
  }
  const auto off = row_offsets(blocks);
  PilotSet ps;
  ps.stacked.resize(off.back(), len);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ps.stacked.middleRows(off[i], blocks[i].rows()) = blocks[i];
  }
  ps.blocks = std::move(blocks);
  return ps;
}

int PilotSet::min_antennas() const {
  Index n = blocks.front().rows();
  for (const auto& b : blocks) n = std::min(n, b.rows());
  return static_cast<int>(n);
}

CMatrix PilotSet::without(int user) const {
  const auto u = static_cast<std::size_t>(user);
  const Index rows = stacked.rows() - blocks.at(u).rows();
  CMatrix out(rows, stacked.cols());
  Index r = 0;
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    if (l == u) continue;
    out.middleRows(r, blocks[l].rows()) = blocks[l];
    r += blocks[l].rows();
  }
  return out;
}

CMatrix PilotQrSplit::unitary() const {
  CMatrix q(q_p.rows(), q_p.cols() + q_perp.cols());
  q << q_p, q_perp;
  return q;
}

PilotSet build_pilots(const NetworkConfig& cfg, std::uint64_t seed) {
  if (!validate_config(cfg).empty()) throw std::invalid_argument("build_pilots: invalid config");
  const Index n_t = cfg.total_antennas();
  const Index r = cfg.min_pilot_length();
  const Index k1 = cfg.k1;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Engine eng = substream(seed, "pilots", static_cast<std::uint64_t>(attempt));
    // Full-rank N_T x N_T draw with N_min columns dropped; extra columns stay
    // inside the span so rank(P) is unchanged.
    const CMatrix square = complex_gaussian(n_t, n_t, eng);
    CMatrix p(n_t, k1);
    p.leftCols(r) = square.leftCols(r);
    if (k1 > r) p.rightCols(k1 - r) = square.leftCols(r) * complex_gaussian(r, k1 - r, eng);

    std::vector<CMatrix> blocks;
    Index row = 0;
    for (int n : cfg.antennas) {
      blocks.emplace_back(p.middleRows(row, n));
      row += n;
    }
    PilotSet ps = PilotSet::from_blocks(std::move(blocks));
    if (validate_pilots(ps, cfg).empty()) return ps;
  }
  throw std::runtime_error("build_pilots: could not satisfy rank conditions");
}

std::vector<std::string> validate_pilots(const PilotSet& ps, const NetworkConfig& cfg) {
  if (ps.users() != cfg.m || static_cast<int>(cfg.antennas.size()) != cfg.m) {
    throw std::invalid_argument("validate_pilots: user count mismatch");
  }
  for (int i = 0; i < cfg.m; ++i) {
    const auto& b = ps.blocks[static_cast<std::size_t>(i)];
    if (b.rows() != cfg.antennas_of(i) || b.cols() != cfg.k1) {
      throw std::invalid_argument("validate_pilots: block " + std::to_string(i + 1) +
                                  " has the wrong shape");
    }
  }
  std::vector<std::string> out;
  const int n_t = cfg.total_antennas();
  for (int i = 0; i < cfg.m; ++i) {
    const std::string idx = std::to_string(i + 1);
    const int n_i = cfg.antennas_of(i);
    if (numerical_rank(ps.blocks[static_cast<std::size_t>(i)]) < n_i) {
      out.push_back("rank(P_" + idx + ") < N_" + idx);
    }
    const int rank_without = numerical_rank(ps.without(i));
    if (rank_without != n_t - n_i) {
      out.push_back("rank(P_(" + idx + ")) = " + std::to_string(rank_without) +
                    " != N_T-N_" + idx + " = " + std::to_string(n_t - n_i));
    }
  }
  const int rank_p = numerical_rank(ps.stacked);
  if (rank_p != cfg.min_pilot_length()) {
    out.push_back("rank(P) = " + std::to_string(rank_p) + " != N_T-N_min = " +
                  std::to_string(cfg.min_pilot_length()));
  }
  return out;
}

PilotQrSplit qr_split(const PilotSet& ps) {
  const CMatrix& p = ps.stacked;
  const Index n_t = p.rows();
  const Index r = n_t - ps.min_antennas();
  if (p.cols() < r) throw std::invalid_argument("qr_split: K_1 < N_T - N_min");

  const double tol = default_rank_rtol(p) * std::max(p.norm(), 1e-300);
  CMatrix q;
  std::vector<Index> pivot(static_cast<std::size_t>(r));

  const Eigen::HouseholderQR<CMatrix> qr(p);
  const CMatrix r_full = qr.matrixQR().triangularView<Eigen::Upper>();
  bool leading_independent = true;
  for (Index k = 0; k < r; ++k) {
    if (std::abs(r_full(k, k)) <= tol) leading_independent = false;
  }
  if (leading_independent) {
    q = qr.householderQ();
    for (Index k = 0; k < r; ++k) pivot[static_cast<std::size_t>(k)] = k;
  } else {
    const Eigen::ColPivHouseholderQR<CMatrix> cp(p);
    q = cp.householderQ();
    for (Index k = 0; k < r; ++k) pivot[static_cast<std::size_t>(k)] = cp.colsPermutation().indices()(k);
  }

  PilotQrSplit out;
  out.q_p = q.leftCols(r);
  out.q_perp = q.rightCols(n_t - r);
  fix_phases(out.q_p, p, pivot);
  out.r_p = out.q_p.adjoint() * p;
  if (numerical_rank(out.r_p) != r || (p - out.q_p * out.r_p).norm() > 1e-8 * std::max(p.norm(), 1.0)) {
    throw std::invalid_argument("qr_split: pilot rank differs from N_T - N_min");
  }
  return out;
}

PairwisePilotMatrix build_pairwise_matrix(const NetworkConfig& cfg,
                                          std::span<const CMatrix> per_session_blocks) {
  if (cfg.m < 3) throw std::invalid_argument("build_pairwise_matrix: needs M >= 3");
  if (static_cast<int>(per_session_blocks.size()) != cfg.m) {
    throw std::invalid_argument("build_pairwise_matrix: expected one block per user");
  }
  const Index k1 = per_session_blocks.front().cols();
  if (k1 < cfg.max_antennas()) throw std::invalid_argument("build_pairwise_matrix: k1 < max N_i");
  for (int i = 0; i < cfg.m; ++i) {
    const auto& b = per_session_blocks[static_cast<std::size_t>(i)];
    if (b.rows() != cfg.antennas_of(i) || b.cols() != k1) {
      throw std::invalid_argument("build_pairwise_matrix: block shape mismatch");
    }
    if (numerical_rank(b) != b.rows()) {
      throw std::invalid_argument("build_pairwise_matrix: block lacks full row rank");
    }
  }

  std::vector<Index> off(static_cast<std::size_t>(cfg.m) + 1, 0);
  for (int i = 0; i < cfg.m; ++i) off[static_cast<std::size_t>(i) + 1] = off[static_cast<std::size_t>(i)] + cfg.antennas_of(i);

  PairwisePilotMatrix out;
  for (int i = 0; i < cfg.m; ++i) {
    for (int j = i + 1; j < cfg.m; ++j) out.sessions.emplace_back(i, j);
  }
  const auto sessions = static_cast<Index>(out.sessions.size());
  out.matrix = CMatrix::Zero(off.back(), sessions * k1);
  for (Index p = 0; p < sessions; ++p) {
    const auto [i, j] = out.sessions[static_cast<std::size_t>(p)];
    for (int u : {i, j}) {
      const auto uu = static_cast<std::size_t>(u);
      out.matrix.block(off[uu], p * k1, per_session_blocks[uu].rows(), k1) = per_session_blocks[uu];
    }
  }
  return out;
}

ModifiedPilotPair build_square_pilots(const TwoUserModifiedConfig& cfg, std::uint64_t seed) {
  if (!validate_config(cfg).empty()) {
    throw std::invalid_argument("build_square_pilots: invalid config");
  }
  auto draw = [seed](Index n, std::string_view purpose) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      Engine eng = substream(seed, purpose, static_cast<std::uint64_t>(attempt));
      CMatrix p = complex_gaussian(n, n, eng);
      if (numerical_rank(p) == n) return p;
    }
    throw std::runtime_error("build_square_pilots: could not draw a nonsingular pilot");
  };
  return ModifiedPilotPair{draw(cfg.n1, "pilots.p1"), draw(cfg.n2, "pilots.p2")};
}

}  // namespace anece
