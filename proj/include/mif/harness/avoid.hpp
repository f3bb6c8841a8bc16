#pragma once

// Exact message count for deterministic one-way protocols of AVOID(t, a, b):
// Alice holds an a-subset A of [t], Bob must answer a b-subset disjoint from
// A. A protocol with m messages is m answer sets B_1..B_m such that every A
// misses at least one of them, so the minimum m is a minimum set cover of the
// a-subsets by the families {A : A and B disjoint}.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mif/core.hpp"
#include "mif/harness/exact.hpp"

namespace mif {

inline constexpr std::uint64_t kAvoidMaxInputs = 10'000;
inline constexpr std::uint64_t kAvoidMaxAnswers = 100'000;

namespace detail {

class DynamicBitset {
 public:
  explicit DynamicBitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Number of bits set in o but not here.
  std::size_t gain(const DynamicBitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(o.words_[i] & ~words_[i]));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// All k-subsets of {0..t-1} as sorted index lists, in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> k_subsets(std::uint32_t t, std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(k);
  for (std::uint32_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == t - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

class SetCoverSolver {
 public:
  SetCoverSolver(std::size_t universe, std::vector<DynamicBitset> sets)
      : universe_(universe), sets_(std::move(sets)), covering_(universe) {
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      max_set_ = std::max(max_set_, sets_[s].count());
      for (std::size_t u = 0; u < universe_; ++u)
        if (sets_[s].test(u)) covering_[u].push_back(s);
    }
  }

  std::size_t solve() {
    for (const auto& c : covering_)
      if (c.empty()) throw std::logic_error("set cover instance has an uncoverable element");
    best_ = greedy();
    search(DynamicBitset(universe_), 0);
    return best_;
  }

 private:
  std::size_t greedy() const {
    DynamicBitset covered(universe_);
    std::size_t used = 0;
    while (covered.count() < universe_) {
      std::size_t pick = 0, gain = 0;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const std::size_t g = covered.gain(sets_[s]);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      covered |= sets_[pick];
      ++used;
    }
    return used;
  }

  void search(const DynamicBitset& covered, std::size_t depth) {
    const std::size_t uncovered = universe_ - covered.count();
    if (uncovered == 0) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + (uncovered + max_set_ - 1) / max_set_ >= best_) return;
    // Branch on the uncovered element with the fewest covering sets.
    std::size_t pivot = universe_;
    for (std::size_t u = 0; u < universe_; ++u) {
      if (covered.test(u)) continue;
      if (pivot == universe_ || covering_[u].size() < covering_[pivot].size()) pivot = u;
    }
    std::vector<std::size_t> order = covering_[pivot];
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return covered.gain(sets_[x]) > covered.gain(sets_[y]);
    });
    for (std::size_t s : order) {
      DynamicBitset next = covered;
      next |= sets_[s];
      search(next, depth + 1);
    }
  }

  std::size_t universe_;
  std::vector<DynamicBitset> sets_;
  std::vector<std::vector<std::size_t>> covering_;
  std::size_t max_set_ = 1;
  std::size_t best_ = 0;
};

}  // namespace detail

// Minimum number of distinct messages in a deterministic one-way protocol
// for AVOID(t, a, b). Requires b >= 1, a + b <= t and size guards on the
// number of possible inputs and answers.
inline std::uint64_t avoid_min_messages(std::uint32_t t, std::uint32_t a, std::uint32_t b) {
  if (b == 0) throw ParameterError("b must be >= 1");
  if (a + b > t) throw ParameterError("need a + b <= t");
  if (binomial(t, a) > kAvoidMaxInputs) throw ParameterError("C(t, a) exceeds the search limit");
  if (binomial(t, b) > kAvoidMaxAnswers) throw ParameterError("C(t, b) exceeds the search limit");

  const auto inputs = detail::k_subsets(t, a);
  const auto answers = detail::k_subsets(t, b);
  std::vector<detail::DynamicBitset> families;
  families.reserve(answers.size());
  std::vector<char> in_answer(t);
  for (const auto& ans : answers) {
    std::fill(in_answer.begin(), in_answer.end(), 0);
    for (auto v : ans) in_answer[v] = 1;
    detail::DynamicBitset fam(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const bool disjoint = std::none_of(inputs[i].begin(), inputs[i].end(), [&](auto v) { return in_answer[v]; });
      if (disjoint) fam.set(i);
    }
    families.push_back(std::move(fam));
  }
  return detail::SetCoverSolver(inputs.size(), std::move(families)).solve();
}

}  // namespace mif
