#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "mif/harness/play.hpp"
#include "mif/random.hpp"

namespace mif {

struct TrialSeeds {
  std::uint64_t algorithm;
  std::uint64_t adversary;
};

inline TrialSeeds trial_seeds(std::uint64_t master_seed, std::uint64_t trial) {
  const std::uint64_t s = derive_trial_seed(master_seed, trial);
  return {derive_trial_seed(s, 0), derive_trial_seed(s, 1)};
}

// Runs `trials` independent games and returns visit(alg, transcript) for each,
// in trial order. make_alg(instance, seed) and make_adv(instance, seed) build a
// fresh algorithm and adversary per trial. Every trial's randomness derives
// from (master_seed, trial index), so the result does not depend on
// `parallel` or on thread scheduling.
template <class MakeAlg, class MakeAdv, class Visit>
auto run_trials(MakeAlg make_alg, MakeAdv make_adv, const Instance& inst, std::uint64_t trials,
                std::uint64_t master_seed, unsigned parallel, std::size_t rounds, Visit visit) {
  using Alg = std::invoke_result_t<MakeAlg&, const Instance&, std::uint64_t>;
  using Result = std::invoke_result_t<Visit&, const Alg&, const Transcript&>;
  std::vector<Result> results(static_cast<std::size_t>(trials));
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t i = first; i < trials; i += stride) {
      const TrialSeeds seeds = trial_seeds(master_seed, i);
      Alg alg = make_alg(inst, seeds.algorithm);
      auto adv = make_adv(inst, seeds.adversary);
      const Transcript t = play(alg, adv, rounds);
      results[static_cast<std::size_t>(i)] = visit(std::as_const(alg), t);
    }
  };
  if (parallel <= 1 || trials <= 1) {
    work(0, 1);
    return results;
  }
  std::vector<std::exception_ptr> errors(parallel);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < parallel; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w, parallel);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace mif
