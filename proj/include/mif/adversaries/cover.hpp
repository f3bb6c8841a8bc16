#pragma once

#include <cstdint>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mif/algorithms/algorithm.hpp"
#include "mif/core.hpp"

namespace mif {

// Outputs a deterministic algorithm can still reach at the end of the stream:
// {query(state after alpha) : alpha in [n]^k}. Aborting continuations
// contribute nothing. Memoized on (encoded state, k); state encodings are
// injective once the random oracle is fixed.
template <MifAlgorithm A>
class ReachableOutputs {
 public:
  explicit ReachableOutputs(std::uint64_t n) : n_(n) {}

  const std::set<Element>& operator()(const A& state, std::uint64_t k) {
    if (state.aborted()) return empty_;
    auto key = std::make_pair(state.encode(), k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<Element> out;
    if (k == 0) {
      out.insert(state.query());
    } else {
      for (Element e = 1; e <= n_; ++e) {
        A next = state;
        if (next.update(e) == UpdateStatus::aborted) continue;
        const auto& sub = (*this)(next, k - 1);
        out.insert(sub.begin(), sub.end());
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::uint64_t n_;
  std::set<Element> empty_;
  std::map<std::pair<BitString, std::uint64_t>, std::set<Element>> memo_;
};

// Adversary against a known deterministic (or fixed-seed) algorithm. It keeps
// a private copy of the algorithm fed with its own inputs, which mirrors the
// real instance exactly. Once the reachable-output set F fits in the remaining
// budget it plays all of F, forcing the final answer into the stream;
// otherwise it plays the element that shrinks F the most (smallest on ties).
template <MifAlgorithm A>
class CoverAdversary {
 public:
  static constexpr std::uint64_t kMaxN = 6;
  static constexpr std::uint64_t kMaxR = 5;

  CoverAdversary(A algorithm, const Instance& inst)
      : inst_(inst), sim_(std::move(algorithm)), reach_(inst.n) {
    if (inst.n > kMaxN || inst.r > kMaxR)
      throw ParameterError("cover adversary limited to n <= 6 and r <= 5");
  }

  Element next(std::span<const Element> history) {
    if (history.size() != played_.size() + 1)
      throw std::logic_error("cover adversary called out of turn");
    const std::uint64_t remaining = inst_.r - played_.size();
    if (remaining == 0) throw std::out_of_range("stream already has r elements");
    Element choice = 1;
    if (sim_.aborted()) {
      // The game is already lost for the algorithm; nothing left to steer.
    } else if (!plan_.empty()) {
      choice = plan_[played_.size() - plan_start_];
    } else {
      const auto& f = reach_(sim_, remaining);
      if (!f.empty() && f.size() <= remaining) {
        plan_.assign(f.begin(), f.end());
        while (plan_.size() < remaining) plan_.push_back(plan_.front());
        plan_start_ = played_.size();
        choice = plan_.front();
      } else {
        choice = greedy(remaining);
      }
    }
    played_.push_back(choice);
    if (!sim_.aborted()) sim_.update(choice);
    return choice;
  }

  // True once the adversary has committed to covering F.
  bool covering() const { return !plan_.empty(); }
  const std::vector<Element>& played() const { return played_; }

 private:
  Element greedy(std::uint64_t remaining) {
    Element best = 1;
    std::size_t best_size = SIZE_MAX;
    for (Element e = 1; e <= inst_.n; ++e) {
      A next = sim_;
      std::size_t size = 0;
      if (next.update(e) != UpdateStatus::aborted) size = reach_(next, remaining - 1).size();
      if (size < best_size) {
        best_size = size;
        best = e;
      }
    }
    return best;
  }

  Instance inst_;
  A sim_;
  ReachableOutputs<A> reach_;
  std::vector<Element> played_;
  std::vector<Element> plan_;
  std::size_t plan_start_ = 0;
};

}  // namespace mif
