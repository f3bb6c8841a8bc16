#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mif/algorithms/algorithm.hpp"
#include "mif/algorithms/params.hpp"

namespace mif {

// Deterministic iterated pigeonhole algorithm. Write e-1 in base s. Phase l
// tracks which values of digit l occur in the stream; once a single value y
// is left, it becomes digit l of the answer (a += (y-1) s^(l-1)) and the next
// phase starts on digit l+1. The answer's remaining digits are taken from the
// least untouched value in the current phase.
//
// Invariant: a < s^(l-1). The reachable (l, a) pairs number
// sum_{j<t} s^j <= s^t and are encoded as a single index after the s bits of x.
class PigeonholeAlgorithm {
 public:
  PigeonholeAlgorithm(const Instance& inst, PigeonholeParams params)
      : inst_(inst), s_(params.s), t_(params.t), x_(static_cast<std::size_t>(params.s), false) {
    if (s_ < 2 || t_ < 1) throw ParameterError("pigeonhole needs s >= 2 and t >= 1");
    if (!detail::bounded_pow(s_, t_, inst.n)) throw ParameterError("pigeonhole needs s^t <= n");
    if (t_ * (s_ - 1) < inst.r) throw ParameterError("pigeonhole needs t(s-1) >= r");
    std::uint64_t p = 1;
    for (std::uint64_t j = 0; j < t_; ++j) {
      pair_count_ += p;
      p *= s_;
    }
  }

  explicit PigeonholeAlgorithm(const Instance& inst) : PigeonholeAlgorithm(inst, pigeonhole_params(inst)) {}

  static PigeonholeAlgorithm create(const Instance& inst, std::uint64_t /*seed*/) {
    return PigeonholeAlgorithm(inst);
  }

  static constexpr std::string_view name() { return "pigeonhole"; }

  UpdateStatus update(Element e) {
    detail::begin_update(inst_, steps_, false, e);
    const std::uint64_t digit = ((e - 1) / place_) % s_;
    if (!x_[digit]) {
      x_[digit] = true;
      ++ones_;
    }
    if (level_ < t_ && ones_ + 1 == s_) {
      const std::uint64_t y = least_zero();
      // The settled digit sits at the weight of the phase that just ended.
      a_ += y * place_;
      ++level_;
      place_ *= s_;
      std::fill(x_.begin(), x_.end(), false);
      ones_ = 0;
    }
    return UpdateStatus::ok;
  }

  Element query() const { return a_ + least_zero() * place_ + 1; }

  BitString encode() const {
    BitString out;
    for (bool b : x_) out.append_bit(b);
    out.append(pair_index(), pair_width());
    return out;
  }

  std::size_t encoded_bits() const { return s_ + pair_width(); }

  void load(const BitString& bits) {
    BitReader in(bits);
    ones_ = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      x_[i] = in.read_bit();
      ones_ += x_[i] ? 1 : 0;
    }
    std::uint64_t idx = in.read(pair_width());
    in.expect_end();
    level_ = 1;
    place_ = 1;
    while (idx >= place_) {
      idx -= place_;
      ++level_;
      place_ *= s_;
    }
    if (level_ > t_) throw std::invalid_argument("pigeonhole level out of range");
    a_ = idx;
  }

  bool aborted() const { return false; }
  bool sound() const { return true; }
  SpaceAccounting accounting() const { return {RandomnessModel::deterministic, 0, 0, false}; }
  const Instance& instance() const { return inst_; }
  std::uint64_t steps() const { return steps_; }

  PigeonholeParams params() const { return {s_, t_}; }
  std::uint64_t level() const { return level_; }
  std::uint64_t offset() const { return a_; }
  // s^(level-1)
  std::uint64_t place() const { return place_; }

 private:
  // 0-based index of the least unmarked digit value.
  std::uint64_t least_zero() const {
    for (std::uint64_t i = 0; i < s_; ++i)
      if (!x_[i]) return i;
    throw std::logic_error("pigeonhole phase has no free digit");
  }

  std::uint64_t pair_index() const {
    std::uint64_t base = 0, p = 1;
    for (std::uint64_t j = 1; j < level_; ++j) {
      base += p;
      p *= s_;
    }
    return base + a_;
  }

  unsigned pair_width() const { return ceil_log2(pair_count_); }

  Instance inst_;
  std::uint64_t s_;
  std::uint64_t t_;
  std::vector<bool> x_;
  std::uint64_t ones_ = 0;
  std::uint64_t level_ = 1;
  std::uint64_t a_ = 0;
  std::uint64_t place_ = 1;
  std::uint64_t pair_count_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace mif
