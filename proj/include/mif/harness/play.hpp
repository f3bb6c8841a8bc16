#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mif/adversaries/adversary.hpp"
#include "mif/algorithms/algorithm.hpp"
#include "mif/transcript.hpp"

namespace mif {

class SoundnessViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Runs one game: query, let the adversary move, update, for `rounds` rounds
// (at most r) or until the algorithm aborts. The algorithm is taken by
// reference so callers can inspect its final state.
//
// The verdict is tracked incrementally; a sound algorithm producing an
// invalid output without aborting raises SoundnessViolation.
template <MifAlgorithm A, MifAdversary Adv>
Transcript play(A& alg, Adv& adv, std::size_t rounds) {
  const Instance& inst = alg.instance();
  if (rounds > inst.r) throw std::invalid_argument("a game has at most r rounds");
  Transcript t;
  std::vector<Element> history;
  history.reserve(rounds + 1);
  t.initial_output = alg.query();
  history.push_back(*t.initial_output);
  t.state_bits.push_back(alg.encoded_bits());

  std::unordered_set<Element> seen;
  for (std::size_t i = 1; i <= rounds; ++i) {
    const Element e = adv.next(history);
    if (!inst.contains(e)) throw std::logic_error("adversary played an element outside [n]");
    t.inputs.push_back(e);
    seen.insert(e);
    if (alg.update(e) == UpdateStatus::aborted) {
      t.aborted_at = i;
      break;
    }
    const Element o = alg.query();
    t.outputs.push_back(o);
    history.push_back(o);
    t.state_bits.push_back(alg.encoded_bits());
    if (!t.first_failure && seen.contains(o)) t.first_failure = i;
  }
  if (alg.sound() && t.first_failure)
    throw SoundnessViolation("sound algorithm emitted a seen element at step " + std::to_string(*t.first_failure));
  return t;
}

template <MifAlgorithm A, MifAdversary Adv>
Transcript play(A& alg, Adv& adv) {
  return play(alg, adv, alg.instance().r);
}

}  // namespace mif
