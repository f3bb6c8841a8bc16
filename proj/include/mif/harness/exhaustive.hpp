#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mif/algorithms/algorithm.hpp"
#include "mif/core.hpp"

namespace mif {

inline constexpr std::uint64_t kExhaustiveStreamLimit = 1'000'000;

struct VerifyResult {
  bool pass = true;
  // Shortest failing prefix found first in lexicographic order.
  std::vector<Element> counterexample;
  std::optional<std::size_t> failing_step;
  std::uint64_t streams = 0;          // n^r
  std::uint64_t aborted_streams = 0;  // streams on which the algorithm aborted
};

// Feeds every stream in [n]^r to copies of `fresh` (a deterministic or
// fixed-seed algorithm). Always checks the answer after the full stream;
// with check_intermediate every answer along the way must avoid its prefix.
// Aborts are counted, not treated as wrong answers.
template <MifAlgorithm A>
VerifyResult exhaustive_verify(const A& fresh, bool check_intermediate) {
  const Instance& inst = fresh.instance();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < inst.r; ++i) {
    if (total > kExhaustiveStreamLimit / inst.n) throw ParameterError("n^r exceeds the exhaustive search limit");
    total *= inst.n;
  }
  VerifyResult res;
  res.streams = total;
  std::vector<Element> prefix;
  std::multiset<Element> seen;

  auto leaves_below = [&](std::size_t depth) {
    std::uint64_t v = 1;
    for (std::size_t i = depth; i < inst.r; ++i) v *= inst.n;
    return v;
  };

  auto dfs = [&](auto& self, const A& state) -> void {
    if (!res.pass) return;
    for (Element e = 1; e <= inst.n && res.pass; ++e) {
      A next = state;
      prefix.push_back(e);
      seen.insert(e);
      if (next.update(e) == UpdateStatus::aborted) {
        res.aborted_streams += leaves_below(prefix.size());
      } else {
        const bool last = prefix.size() == inst.r;
        if ((check_intermediate || last) && seen.contains(next.query())) {
          res.pass = false;
          res.counterexample = prefix;
          res.failing_step = prefix.size();
        } else if (!last) {
          self(self, next);
        }
      }
      seen.erase(seen.find(e));
      prefix.pop_back();
    }
  };
  dfs(dfs, fresh);
  return res;
}

struct ReachableStates {
  std::uint64_t count = 0;     // distinct encodings over all prefixes of length 0..r
  std::uint64_t max_bits = 0;  // longest of them
};

// Breadth-first walk over distinct reachable states. Covers every stream in
// [n]^r without enumerating them, which is what makes large n tractable
// when the state space is small.
template <MifAlgorithm A>
ReachableStates reachable_states(const A& fresh) {
  const Instance& inst = fresh.instance();
  ReachableStates out;
  std::set<BitString> visited{fresh.encode()};
  std::vector<A> frontier{fresh};
  out.max_bits = fresh.encoded_bits();
  for (std::uint64_t depth = 0; depth < inst.r && !frontier.empty(); ++depth) {
    std::vector<A> next_frontier;
    for (const A& state : frontier) {
      for (Element e = 1; e <= inst.n; ++e) {
        A next = state;
        if (next.update(e) == UpdateStatus::aborted) continue;
        out.max_bits = std::max<std::uint64_t>(out.max_bits, next.encoded_bits());
        // States are compared by encoding; the step counter is not state.
        if (visited.insert(next.encode()).second) next_frontier.push_back(std::move(next));
      }
    }
    frontier = std::move(next_frontier);
  }
  out.count = visited.size();
  return out;
}

template <MifAlgorithm A>
VerifyResult exhaustive_verify(const A& fresh) {
  return exhaustive_verify(fresh, fresh.sound());
}

}  // namespace mif
