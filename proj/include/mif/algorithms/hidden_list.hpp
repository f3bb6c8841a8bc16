#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mif/algorithms/algorithm.hpp"
#include "mif/algorithms/params.hpp"
#include "mif/random.hpp"

namespace mif {

// Immutable random list with an element -> position index. Positions are
// 1-based. Shared between copies of an algorithm, which is safe because it is
// never written after construction.
class HiddenList {
 public:
  HiddenList(std::vector<Element> list, std::uint64_t oracle_bits)
      : list_(std::move(list)), oracle_bits_(oracle_bits) {
    position_.reserve(list_.size());
    for (std::size_t i = 0; i < list_.size(); ++i) {
      if (!position_.emplace(list_[i], i + 1).second)
        throw ParameterError("hidden list contains a repeated element");
    }
  }

  std::size_t size() const { return list_.size(); }
  Element at(std::uint64_t pos) const { return list_.at(pos - 1); }
  const std::vector<Element>& elements() const { return list_; }
  std::uint64_t oracle_bits() const { return oracle_bits_; }

  // 1-based position of e, or 0 when e is not listed.
  std::uint64_t position(Element e) const {
    auto it = position_.find(e);
    return it == position_.end() ? 0 : it->second;
  }

 private:
  std::vector<Element> list_;
  std::unordered_map<Element, std::uint64_t> position_;
  std::uint64_t oracle_bits_ = 0;
};

// Adversarially robust algorithm: output L_c, the first list entry not yet
// ruled out. J records stream elements that sit further down the list; the
// run aborts when |J| exceeds t. With t = r it never aborts (zero-error mode,
// charged by expected rather than worst-case bits).
//
// Encoding: c-1 in ceil(log(r+1)) bits, |J| in ceil(log r) bits, then each
// index of J minus one in ceil(log r) bits, ascending.
class HiddenListAlgorithm {
 public:
  HiddenListAlgorithm(const Instance& inst, std::uint64_t t, std::vector<Element> list,
                      bool zero_error = false, std::uint64_t oracle_bits = 0)
      : inst_(inst),
        t_(t),
        zero_error_(zero_error),
        list_(std::make_shared<const HiddenList>(std::move(list), oracle_bits)),
        in_j_(static_cast<std::size_t>(inst.r + 2), false) {
    if (list_->size() != inst.r + 1) throw ParameterError("hidden list must hold r+1 elements");
    for (Element e : list_->elements())
      if (!inst.contains(e)) throw ParameterError("hidden list element outside [n]");
  }

  static HiddenListAlgorithm create(const Instance& inst, std::uint64_t seed) {
    return sampled(inst, hidden_list_params(inst), false, seed);
  }

  static HiddenListAlgorithm create_zero_error(const Instance& inst, std::uint64_t seed) {
    return sampled(inst, inst.r, true, seed);
  }

  std::string_view name() const { return zero_error_ ? "zero" : "hidden"; }

  UpdateStatus update(Element e) {
    detail::begin_update(inst_, steps_, aborted_, e);
    while (e == list_->at(c_) || in_j_[c_]) {
      ++c_;
      if (c_ > inst_.r + 1) throw std::logic_error("hidden list counter ran past r+1");
    }
    const std::uint64_t pos = list_->position(e);
    if (pos > c_ && pos <= inst_.r && !in_j_[pos]) {
      in_j_[pos] = true;
      ++j_size_;
    }
    if (j_size_ > t_) {
      aborted_ = true;
      return UpdateStatus::aborted;
    }
    return UpdateStatus::ok;
  }

  Element query() const {
    if (aborted_) throw AbortedError();
    return list_->at(c_);
  }

  BitString encode() const {
    BitString out;
    const unsigned w = index_width();
    out.append(c_ - 1, counter_width());
    out.append(j_size_, w);
    for (std::uint64_t i = 1; i <= inst_.r; ++i)
      if (in_j_[i]) out.append(i - 1, w);
    return out;
  }

  std::size_t encoded_bits() const { return counter_width() + index_width() * (1 + j_size_); }

  void load(const BitString& bits) {
    BitReader in(bits);
    c_ = in.read(counter_width()) + 1;
    const unsigned w = index_width();
    j_size_ = in.read(w);
    std::fill(in_j_.begin(), in_j_.end(), false);
    for (std::uint64_t k = 0; k < j_size_; ++k) in_j_[in.read(w) + 1] = true;
    in.expect_end();
    aborted_ = j_size_ > t_;
  }

  bool aborted() const { return aborted_; }
  bool sound() const { return true; }
  SpaceAccounting accounting() const {
    return {RandomnessModel::oracle, list_->oracle_bits(), 0, zero_error_};
  }
  const Instance& instance() const { return inst_; }
  std::uint64_t steps() const { return steps_; }

  std::uint64_t threshold() const { return t_; }
  std::uint64_t counter() const { return c_; }
  std::uint64_t j_size() const { return j_size_; }
  bool in_j(std::uint64_t index) const { return in_j_.at(index); }
  const std::vector<Element>& list() const { return list_->elements(); }

 private:
  static HiddenListAlgorithm sampled(const Instance& inst, std::uint64_t t, bool zero_error,
                                     std::uint64_t seed) {
    SeededSource src(seed);
    auto list = sample_distinct_sequence(inst.n, inst.r + 1, src);
    return HiddenListAlgorithm(inst, t, std::move(list), zero_error, src.bits_consumed());
  }

  unsigned counter_width() const { return ceil_log2(inst_.r + 1); }
  unsigned index_width() const { return ceil_log2(inst_.r); }

  Instance inst_;
  std::uint64_t t_;
  bool zero_error_;
  std::shared_ptr<const HiddenList> list_;
  std::uint64_t c_ = 1;
  std::vector<bool> in_j_;  // indexed by list position; J holds positions 2..r
  std::uint64_t j_size_ = 0;
  bool aborted_ = false;
  std::uint64_t steps_ = 0;
};

}  // namespace mif
