#include "anece/channel.hpp"

#include <numeric>
#include <stdexcept>

#include "anece/random.hpp"

namespace anece {

CMatrix ChannelRealization::receive_stack(int i) const {
  const int n_t = std::accumulate(antennas.begin(), antennas.end(), 0);
  const int n_i = antennas.at(static_cast<std::size_t>(i));
  CMatrix out(n_i, n_t - n_i);
  Index col = 0;
  for (int l = 0; l < users(); ++l) {
    if (l == i) continue;
    const CMatrix& b = h(i, l);
    out.middleCols(col, b.cols()) = b;
    col += b.cols();
  }
  return out;
}

ChannelRealization sample_channels(std::span<const int> antennas, int n_eve, std::uint64_t seed,
                                   std::uint64_t index) {
  if (antennas.size() < 2 || n_eve < 0) throw std::invalid_argument("sample_channels: bad shape");
  Engine eng = substream(seed, "channels", index);
  ChannelRealization ch;
  ch.antennas.assign(antennas.begin(), antennas.end());
  const int m = ch.users();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      CMatrix h = complex_gaussian(ch.antennas[i], ch.antennas[j], eng);
      ch.user_channels[{j, i}] = h.transpose();
      ch.user_channels[{i, j}] = std::move(h);
    }
  }
  const int n_t = std::accumulate(antennas.begin(), antennas.end(), 0);
  ch.eve_stacked.resize(n_eve, n_t);
  Index col = 0;
  for (int i = 0; i < m; ++i) {
    ch.eve_channels.push_back(complex_gaussian(n_eve, ch.antennas[i], eng));
    ch.eve_stacked.middleCols(col, ch.antennas[i]) = ch.eve_channels.back();
    col += ch.antennas[i];
  }
  return ch;
}

ChannelRealization sample_channels(const NetworkConfig& cfg, std::uint64_t seed,
                                   std::uint64_t index) {
  return sample_channels(std::span<const int>(cfg.antennas), cfg.n_eve, seed, index);
}

Phase1Signals synth_phase1(const ChannelRealization& ch, const PilotSet& ps, double sigma,
                           std::uint64_t seed, double noise_amplitude) {
  if (ps.users() != ch.users()) throw std::invalid_argument("synth_phase1: user count mismatch");
  for (int i = 0; i < ch.users(); ++i) {
    if (ps.blocks[static_cast<std::size_t>(i)].rows() != ch.antennas[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("synth_phase1: pilot block shape mismatch");
    }
  }
  Engine eng = substream(seed, "noise.phase1");
  const Index k1 = ps.length();
  Phase1Signals out;
  for (int i = 0; i < ch.users(); ++i) {
    const CMatrix signal = sigma * ch.receive_stack(i) * ps.without(i);
    out.user_rx.push_back(signal + noise_amplitude * complex_gaussian(signal.rows(), k1, eng));
  }
  out.eve_rx = sigma * ch.eve_stacked * ps.stacked +
               noise_amplitude * complex_gaussian(ch.n_eve(), k1, eng);
  return out;
}

Phase2Signals synth_phase2(const ChannelRealization& ch, const NetworkConfig& cfg, double sigma,
                           std::uint64_t seed, double noise_amplitude) {
  if (cfg.k2 < 1) throw std::invalid_argument("synth_phase2: K_2 < 1");
  if (cfg.antennas != ch.antennas || cfg.n_eve != ch.n_eve()) {
    throw std::invalid_argument("synth_phase2: config does not match channels");
  }
  Engine eng = substream(seed, "phase2");
  Phase2Signals out;
  for (int n : cfg.antennas) out.symbols.push_back(complex_gaussian(n, cfg.k2, eng));
  CMatrix x(cfg.total_antennas(), cfg.k2);
  Index row = 0;
  for (const auto& s : out.symbols) {
    x.middleRows(row, s.rows()) = s;
    row += s.rows();
  }
  for (int i = 0; i < cfg.m; ++i) {
    CMatrix y = noise_amplitude * complex_gaussian(cfg.antennas_of(i), cfg.k2, eng);
    for (int l = 0; l < cfg.m; ++l) {
      if (l != i) y += sigma * ch.h(i, l) * out.symbols[static_cast<std::size_t>(l)];
    }
    out.user_rx.push_back(std::move(y));
  }
  out.eve_rx = sigma * ch.eve_stacked * x + noise_amplitude * complex_gaussian(cfg.n_eve, cfg.k2, eng);
  return out;
}

ModifiedSessionSignals synth_modified_session(const TwoUserModifiedConfig& cfg,
                                              const ModifiedPilotPair& pp,
                                              const ChannelRealization& ch, double sigma,
                                              std::uint64_t seed, double noise_amplitude) {
  if (!validate_config(cfg).empty()) throw std::invalid_argument("synth_modified_session: invalid config");
  if (ch.antennas != std::vector<int>{cfg.n1, cfg.n2} || ch.n_eve() != cfg.n_eve) {
    throw std::invalid_argument("synth_modified_session: channels do not match config");
  }
  if (pp.p1.rows() != cfg.n1 || pp.p1.cols() != cfg.n1 || pp.p2.rows() != cfg.n2 ||
      pp.p2.cols() != cfg.n2) {
    throw std::invalid_argument("synth_modified_session: pilot shape mismatch");
  }
  const int n1 = cfg.n1;
  const int n2 = cfg.n2;
  const int k = cfg.k_total;
  Engine eng = substream(seed, "modified");
  ModifiedSessionSignals out;
  out.x1 = complex_gaussian(n1, k - n1, eng);
  out.x2 = complex_gaussian(n2, k - n2, eng);

  auto noise = [&](Index r, Index c) -> CMatrix {
    return noise_amplitude * complex_gaussian(r, c, eng);
  };
  const CMatrix& h12 = ch.h(0, 1);
  const CMatrix& h21 = ch.h(1, 0);
  out.y1_p1 = sigma * h12 * pp.p2 + noise(n1, n2);
  out.y2_p1 = sigma * h21 * pp.p1 + noise(n2, n1);
  out.y1_p2 = sigma * h12 * out.x2 + noise(n1, k - n2);
  out.y2_p2 = sigma * h21 * out.x1 + noise(n2, k - n1);

  // Node 1 sends [P_1, X_1]; node 2 sends [P_2, X_2].
  CMatrix tx(n1 + n2, k);
  tx.topLeftCorner(n1, n1) = pp.p1;
  tx.topRightCorner(n1, k - n1) = out.x1;
  tx.bottomLeftCorner(n2, n2) = pp.p2;
  tx.bottomRightCorner(n2, k - n2) = out.x2;
  out.eve_rx_full = sigma * ch.eve_stacked * tx + noise(cfg.n_eve, k);
  return out;
}

}  // namespace anece
