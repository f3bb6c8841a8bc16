#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mif/algorithms/algorithm.hpp"
#include "mif/algorithms/params.hpp"
#include "mif/algorithms/trivial.hpp"
#include "mif/random.hpp"

namespace mif {

// Random-start batch-list algorithm. [n] is cut into blocks of w elements;
// L is a random list of t distinct block numbers, part of the state. The
// output is the least unseen element of block L_c, with x tracking coverage
// of that block. J marks later list positions whose block has been touched,
// so c skips them when block L_c fills up. Aborts once c passes t.
//
// Outside r < n/32 and delta >= e^(-r/6) the trivial algorithm runs instead.
//
// Encoding: L (t values of ceil(log floor(n/w)) bits), c-1 in ceil(log t)
// bits, J as a t-bit vector, then the w bits of x.
class BatchListAlgorithm {
 public:
  BatchListAlgorithm(const Instance& inst, std::uint64_t w, std::vector<std::uint64_t> blocks)
      : inst_(inst), w_(w), t_(blocks.size()), list_(std::move(blocks)) {
    if (w_ == 0 || t_ == 0) throw ParameterError("batch list needs w >= 1 and t >= 1");
    block_count_ = inst.n / w_;
    for (std::size_t i = 0; i < list_.size(); ++i) {
      if (list_[i] < 1 || list_[i] > block_count_) throw ParameterError("block number outside [n/w]");
      if (!position_.emplace(list_[i], i + 1).second) throw ParameterError("repeated block in list");
    }
    in_j_.assign(static_cast<std::size_t>(t_ + 2), false);
    x_.assign(static_cast<std::size_t>(w_), false);
  }

  static BatchListAlgorithm create(const Instance& inst, std::uint64_t seed) {
    const BatchListParams p = batch_list_params(inst);
    if (p.fallback) return BatchListAlgorithm(TrivialAlgorithm(inst), p.fallback_reason);
    SeededSource src(seed);
    auto blocks = sample_distinct_sequence(inst.n / p.w, p.t, src);
    return BatchListAlgorithm(inst, p.w, std::move(blocks));
  }

  static constexpr std::string_view name() { return "batch"; }

  bool is_fallback() const { return fallback_.has_value(); }
  const std::string& fallback_reason() const { return fallback_reason_; }

  UpdateStatus update(Element e) {
    if (fallback_) return fallback_->update(e);
    detail::begin_update(inst_, steps_, aborted_, e);
    const std::uint64_t h = (e + w_ - 1) / w_;
    const std::uint64_t j = position_of(h);
    if (j > c_) in_j_[j] = true;
    if (h == list_[c_ - 1]) {
      const std::uint64_t k = e - w_ * (h - 1) - 1;
      if (!x_[k]) {
        x_[k] = true;
        ++ones_;
      }
    }
    if (ones_ == w_) {
      ++c_;
      while (c_ <= t_ && in_j_[c_]) ++c_;
      std::fill(x_.begin(), x_.end(), false);
      ones_ = 0;
    }
    if (c_ > t_) {
      aborted_ = true;
      return UpdateStatus::aborted;
    }
    return UpdateStatus::ok;
  }

  Element query() const {
    if (fallback_) return fallback_->query();
    if (aborted_) throw AbortedError();
    std::uint64_t j = 0;
    while (j < w_ && x_[j]) ++j;
    if (j == w_) throw std::logic_error("current block fully covered");
    return w_ * (list_[c_ - 1] - 1) + j + 1;
  }

  BitString encode() const {
    if (fallback_) return fallback_->encode();
    if (aborted_) throw AbortedError();
    BitString out;
    const unsigned lw = block_width();
    for (std::uint64_t b : list_) out.append(b - 1, lw);
    out.append(c_ - 1, counter_width());
    for (std::uint64_t k = 1; k <= t_; ++k) out.append_bit(in_j_[k]);
    for (bool b : x_) out.append_bit(b);
    return out;
  }

  std::size_t encoded_bits() const {
    if (fallback_) return fallback_->encoded_bits();
    return t_ * block_width() + counter_width() + t_ + w_;
  }

  void load(const BitString& bits) {
    if (fallback_) return fallback_->load(bits);
    BitReader in(bits);
    const unsigned lw = block_width();
    for (std::uint64_t b : list_)
      if (in.read(lw) != b - 1) throw std::invalid_argument("encoded block list differs from this instance");
    c_ = in.read(counter_width()) + 1;
    for (std::uint64_t k = 1; k <= t_; ++k) in_j_[k] = in.read_bit();
    ones_ = 0;
    for (std::size_t k = 0; k < x_.size(); ++k) {
      x_[k] = in.read_bit();
      ones_ += x_[k] ? 1 : 0;
    }
    in.expect_end();
    aborted_ = false;
  }

  bool aborted() const { return fallback_ ? false : aborted_; }
  bool sound() const { return true; }
  SpaceAccounting accounting() const {
    if (fallback_) return fallback_->accounting();
    return {RandomnessModel::seed, 0, seed_bits(), false};
  }
  const Instance& instance() const { return inst_; }

  std::uint64_t block_size() const { return w_; }
  std::uint64_t list_length() const { return t_; }
  std::uint64_t counter() const { return c_; }
  std::uint64_t j_size() const { return static_cast<std::uint64_t>(std::count(in_j_.begin(), in_j_.end(), true)); }
  bool in_j(std::uint64_t index) const { return in_j_.at(index); }
  const std::vector<std::uint64_t>& blocks() const { return list_; }
  // Bits spent on L; counted inside encoded_bits().
  std::uint64_t seed_bits() const { return fallback_ ? 0 : t_ * block_width(); }

 private:
  BatchListAlgorithm(TrivialAlgorithm fallback, std::string reason)
      : inst_(fallback.instance()), fallback_(std::move(fallback)), fallback_reason_(std::move(reason)) {}

  std::uint64_t position_of(std::uint64_t block) const {
    auto it = position_.find(block);
    return it == position_.end() ? 0 : it->second;
  }

  unsigned block_width() const { return ceil_log2(block_count_); }
  unsigned counter_width() const { return ceil_log2(t_); }

  Instance inst_;
  std::uint64_t w_ = 0;
  std::uint64_t t_ = 0;
  std::uint64_t block_count_ = 0;
  std::vector<std::uint64_t> list_;
  std::unordered_map<std::uint64_t, std::uint64_t> position_;
  std::uint64_t c_ = 1;
  std::vector<bool> in_j_;
  std::vector<bool> x_;
  std::uint64_t ones_ = 0;
  bool aborted_ = false;
  std::uint64_t steps_ = 0;
  std::optional<TrivialAlgorithm> fallback_;
  std::string fallback_reason_;
};

}  // namespace mif
