#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mif/algorithms/algorithm.hpp"

namespace mif {

// Deterministic baseline: a bit per element of [r]. Some element of [r+1]
// is always missing, since r elements cannot cover r+1 values.
class TrivialAlgorithm {
 public:
  explicit TrivialAlgorithm(const Instance& inst)
      : inst_(inst), seen_(static_cast<std::size_t>(inst.r), false) {}

  static TrivialAlgorithm create(const Instance& inst, std::uint64_t /*seed*/) {
    return TrivialAlgorithm(inst);
  }

  static constexpr std::string_view name() { return "trivial"; }

  UpdateStatus update(Element e) {
    detail::begin_update(inst_, steps_, false, e);
    if (e <= inst_.r) {
      seen_[e - 1] = true;
      advance_cursor();
    }
    return UpdateStatus::ok;
  }

  Element query() const { return first_unseen_ + 1; }

  BitString encode() const {
    BitString out;
    for (bool b : seen_) out.append_bit(b);
    return out;
  }

  std::size_t encoded_bits() const { return seen_.size(); }

  void load(const BitString& bits) {
    BitReader in(bits);
    for (std::size_t i = 0; i < seen_.size(); ++i) seen_[i] = in.read_bit();
    in.expect_end();
    first_unseen_ = 0;
    advance_cursor();
  }

  bool aborted() const { return false; }
  bool sound() const { return true; }
  SpaceAccounting accounting() const { return {RandomnessModel::deterministic, 0, 0, false}; }
  const Instance& instance() const { return inst_; }
  std::uint64_t steps() const { return steps_; }

 private:
  // Marks only ever turn on, so the least unmarked slot never moves left.
  void advance_cursor() {
    while (first_unseen_ < seen_.size() && seen_[first_unseen_]) ++first_unseen_;
  }

  Instance inst_;
  std::vector<bool> seen_;
  std::size_t first_unseen_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace mif
