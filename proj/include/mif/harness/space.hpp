#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "mif/harness/trials.hpp"

namespace mif {

struct SpaceReport {
  RandomnessModel model = RandomnessModel::deterministic;
  std::uint64_t max_state_bits = 0;
  // Mean of per-trial maxima for worst-case models; mean over every recorded
  // step for expected-cost (zero-error) algorithms.
  double mean_state_bits = 0;
  double mean_trial_max_bits = 0;
  double mean_step_bits = 0;
  // Free oracle randomness, not part of max_state_bits.
  std::uint64_t oracle_random_bits = 0;
  // Random-start bits, already included in max_state_bits.
  std::uint64_t seed_bits = 0;
  bool expected_cost = false;
};

template <class MakeAlg, class MakeAdv>
SpaceReport space_profile(MakeAlg make_alg, MakeAdv make_adv, const Instance& inst, std::uint64_t trials,
                          std::uint64_t master_seed, unsigned parallel = 1, std::size_t rounds = SIZE_MAX) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  if (rounds == SIZE_MAX) rounds = inst.r;
  struct Sample {
    SpaceAccounting accounting;
    std::uint64_t max_bits = 0;
    std::uint64_t sum_bits = 0;
    std::uint64_t steps = 0;
  };
  const auto samples = run_trials(make_alg, make_adv, inst, trials, master_seed, parallel, rounds,
                                  [](const auto& alg, const Transcript& t) {
                                    Sample s;
                                    s.accounting = alg.accounting();
                                    for (std::size_t b : t.state_bits) {
                                      s.max_bits = std::max<std::uint64_t>(s.max_bits, b);
                                      s.sum_bits += b;
                                    }
                                    s.steps = t.state_bits.size();
                                    return s;
                                  });
  SpaceReport rep;
  rep.model = samples.front().accounting.model;
  rep.expected_cost = samples.front().accounting.expected_cost;
  double trial_max_sum = 0, step_sum = 0, step_count = 0;
  for (const auto& s : samples) {
    rep.max_state_bits = std::max(rep.max_state_bits, s.max_bits);
    rep.oracle_random_bits = std::max(rep.oracle_random_bits, s.accounting.oracle_random_bits);
    rep.seed_bits = std::max(rep.seed_bits, s.accounting.seed_bits);
    trial_max_sum += static_cast<double>(s.max_bits);
    step_sum += static_cast<double>(s.sum_bits);
    step_count += static_cast<double>(s.steps);
  }
  rep.mean_trial_max_bits = trial_max_sum / static_cast<double>(samples.size());
  rep.mean_step_bits = step_count > 0 ? step_sum / step_count : 0;
  rep.mean_state_bits = rep.expected_cost ? rep.mean_step_bits : rep.mean_trial_max_bits;
  return rep;
}

}  // namespace mif
