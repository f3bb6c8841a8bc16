#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mif {

// Stream elements and outputs are 1-based members of [n].
using Element = std::uint64_t;

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an aborted algorithm is queried or updated again.
class AbortedError : public std::logic_error {
 public:
  AbortedError() : std::logic_error("algorithm has aborted") {}
};

struct Instance {
  std::uint64_t n = 0;  // universe size
  std::uint64_t r = 0;  // stream length
  double delta = 1.0;   // target error probability

  bool contains(Element e) const { return e >= 1 && e <= n; }
};

inline Instance new_instance(std::uint64_t n, std::uint64_t r, double delta) {
  if (n == 0) throw ParameterError("n must be positive");
  if (r == 0) throw ParameterError("r must be positive");
  if (r >= n) throw ParameterError("r must be < n");
  if (!(delta > 0.0 && delta <= 1.0))
    throw ParameterError("delta must lie in (0, 1]");
  return Instance{n, r, delta};
}

enum class UpdateStatus { ok, aborted };

enum class RandomnessModel { oracle, tape, seed, deterministic };

inline const char* to_string(RandomnessModel m) {
  switch (m) {
    case RandomnessModel::oracle: return "oracle";
    case RandomnessModel::tape: return "tape";
    case RandomnessModel::seed: return "seed";
    case RandomnessModel::deterministic: return "deterministic";
  }
  return "?";
}

// How an algorithm's randomness is charged. Oracle bits are free and reported
// beside the state; seed bits are part of the encoded state.
struct SpaceAccounting {
  RandomnessModel model = RandomnessModel::deterministic;
  std::uint64_t oracle_random_bits = 0;
  std::uint64_t seed_bits = 0;
  bool expected_cost = false;  // cost is mean bits rather than max bits
};

// ceil(log2(x)) for x >= 1; zero for x <= 1.
constexpr unsigned ceil_log2(std::uint64_t x) {
  unsigned bits = 0;
  std::uint64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++bits;
    if (v == 0) return 64;
  }
  return bits;
}

// Number of bits needed to write any value in [0, count).
constexpr unsigned width_for(std::uint64_t count) { return ceil_log2(count); }

}  // namespace mif
