#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mif/core.hpp"

namespace mif {

// SplitMix64 finalizer. Fixed constants, so results are stable everywhere.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t trial_index) {
  return mix64(master ^ mix64(trial_index ^ 0x6a09e667f3bcc909ULL));
}

// Reproducible bit source that counts every bit it hands out.
class SeededSource {
 public:
  explicit SeededSource(std::uint64_t master_seed) : seed_(master_seed), engine_(master_seed) {}

  std::uint64_t master_seed() const { return seed_; }
  std::uint64_t bits_consumed() const { return consumed_; }

  // Next `width` bits (width <= 64) as an unsigned integer.
  std::uint64_t bits(unsigned width) {
    if (width == 0) return 0;
    if (width > 64) throw std::invalid_argument("at most 64 bits per draw");
    consumed_ += width;
    std::uint64_t out = 0;
    unsigned need = width;
    while (need > 0) {
      if (available_ == 0) {
        buffer_ = engine_();
        available_ = 64;
      }
      unsigned take = need < available_ ? need : available_;
      std::uint64_t chunk = take == 64 ? buffer_ : (buffer_ & ((std::uint64_t{1} << take) - 1));
      buffer_ = take == 64 ? 0 : buffer_ >> take;
      available_ -= take;
      out = take == 64 ? chunk : (out << take) | chunk;
      need -= take;
    }
    return out;
  }

  // Uniform on [0, bound) by rejection over ceil(log2 bound)-bit draws.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    if (bound == 1) return 0;
    const unsigned width = static_cast<unsigned>(std::bit_width(bound - 1));
    for (;;) {
      std::uint64_t v = bits(width);
      if (v < bound) return v;
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
  std::uint64_t consumed_ = 0;
};

// Each rejection round accepts with probability > 1/2, so the expected bit
// cost of one draw from [m] is below 2 * ceil(log2 m). Tests hold sequences
// of draws to this multiple.
inline constexpr unsigned kSamplingBitFactor = 4;

// Uniformly random sequence of `length` distinct elements of [universe],
// via a partial Fisher-Yates shuffle over a sparse swap map (O(length) memory).
inline std::vector<Element> sample_distinct_sequence(std::uint64_t universe, std::uint64_t length,
                                                     SeededSource& src) {
  if (length > universe) throw ParameterError("cannot draw more distinct elements than the universe holds");
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  swapped.reserve(static_cast<std::size_t>(2 * length));
  auto at = [&](std::uint64_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(length));
  for (std::uint64_t i = 0; i < length; ++i) {
    std::uint64_t j = i + src.uniform_below(universe - i);
    std::uint64_t vi = at(i);
    std::uint64_t vj = at(j);
    swapped[j] = vi;
    swapped[i] = vj;
    out.push_back(vj + 1);
  }
  return out;
}

}  // namespace mif
