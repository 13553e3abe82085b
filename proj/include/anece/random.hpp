#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "anece/model.hpp"

namespace anece {

using Engine = std::mt19937_64;

/// Stable 64-bit FNV-1a hash of a purpose tag.
constexpr std::uint64_t purpose_tag(std::string_view purpose) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : purpose) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Independent engine for (seed, purpose, index). Streams for different
/// purposes or indices never share state, so results do not depend on the
/// order in which streams are consumed.
inline Engine substream(std::uint64_t seed, std::string_view purpose, std::uint64_t index = 0) {
  const std::uint64_t tag = purpose_tag(purpose);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Engine(seq);
}

/// i.i.d. CN(0, variance) entries: each real component has variance/2.
inline CMatrix complex_gaussian(Index rows, Index cols, Engine& eng, double variance = 1.0) {
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  CMatrix out(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) {
      const double re = normal(eng);
      const double im = normal(eng);
      out(r, c) = Complex(re, im);
    }
  }
  return out;
}

}  // namespace anece
