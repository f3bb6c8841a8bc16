#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "mif/algorithms/algorithm.hpp"
#include "mif/algorithms/hidden_list.hpp"
#include "mif/algorithms/params.hpp"
#include "mif/random.hpp"

namespace mif {

// Static-setting sampler: track whether each of L_1..L_t has been seen and
// output the first unseen one, falling back to the untracked L_{t+1}. Wrong
// exactly when the stream contains all of L. Not sound against adversaries.
class ClassicalAlgorithm {
 public:
  ClassicalAlgorithm(const Instance& inst, std::uint64_t t, std::vector<Element> list,
                     std::uint64_t oracle_bits = 0)
      : inst_(inst),
        t_(t),
        list_(std::make_shared<const HiddenList>(std::move(list), oracle_bits)),
        seen_(static_cast<std::size_t>(t), false) {
    if (list_->size() != t + 1) throw ParameterError("sampling list must hold t+1 elements");
    for (Element e : list_->elements())
      if (!inst.contains(e)) throw ParameterError("sampling list element outside [n]");
  }

  static ClassicalAlgorithm create(const Instance& inst, std::uint64_t seed) {
    const std::uint64_t t = classical_params(inst);
    SeededSource src(seed);
    auto list = sample_distinct_sequence(inst.n, t + 1, src);
    return ClassicalAlgorithm(inst, t, std::move(list), src.bits_consumed());
  }

  static constexpr std::string_view name() { return "classical"; }

  UpdateStatus update(Element e) {
    detail::begin_update(inst_, steps_, false, e);
    const std::uint64_t pos = list_->position(e);
    if (pos >= 1 && pos <= t_) {
      seen_[pos - 1] = true;
      while (first_unseen_ < t_ && seen_[first_unseen_]) ++first_unseen_;
    }
    return UpdateStatus::ok;
  }

  Element query() const { return list_->at(first_unseen_ + 1); }

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
    while (first_unseen_ < t_ && seen_[first_unseen_]) ++first_unseen_;
  }

  bool aborted() const { return false; }
  bool sound() const { return false; }
  SpaceAccounting accounting() const {
    return {RandomnessModel::oracle, list_->oracle_bits(), 0, false};
  }
  const Instance& instance() const { return inst_; }
  std::uint64_t steps() const { return steps_; }

  std::uint64_t tracked() const { return t_; }
  const std::vector<Element>& list() const { return list_->elements(); }

 private:
  Instance inst_;
  std::uint64_t t_;
  std::shared_ptr<const HiddenList> list_;
  std::vector<bool> seen_;
  std::uint64_t first_unseen_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace mif
