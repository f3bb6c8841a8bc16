#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "mif/harness/trials.hpp"
#include "mif/transcript.hpp"

namespace mif {

struct ErrorEstimate {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double point = 0;
  double ci_low = 0;
  double ci_high = 1;
  std::string_view method = "wilson";
};

// Wilson score interval; z defaults to the two-sided 95% quantile.
inline ErrorEstimate wilson_estimate(std::uint64_t failures, std::uint64_t trials, double z = 1.959963984540054) {
  ErrorEstimate e;
  e.trials = trials;
  e.failures = failures;
  if (trials == 0) return e;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  e.point = p;
  e.ci_low = failures == 0 ? 0.0 : std::clamp(centre - half, 0.0, p);
  e.ci_high = failures == trials ? 1.0 : std::clamp(centre + half, p, 1.0);
  return e;
}

struct ErrorReport {
  ErrorEstimate sequence;      // adversarial judgment: any bad output or an abort
  ErrorEstimate final_output;  // static judgment: the last answer only
  std::uint64_t aborts = 0;
  std::uint64_t non_abort_failures = 0;
};

template <class MakeAlg, class MakeAdv>
ErrorReport estimate_error(MakeAlg make_alg, MakeAdv make_adv, const Instance& inst, std::uint64_t trials,
                           std::uint64_t master_seed, unsigned parallel = 1, std::size_t rounds = SIZE_MAX) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  if (rounds == SIZE_MAX) rounds = inst.r;
  struct Outcome {
    ValidityReport verdict;
  };
  const auto outcomes = run_trials(make_alg, make_adv, inst, trials, master_seed, parallel, rounds,
                                   [&inst](const auto&, const Transcript& t) {
                                     return Outcome{check_transcript(inst, t)};
                                   });
  std::uint64_t seq = 0, fin = 0, aborts = 0, silent = 0;
  for (const auto& o : outcomes) {
    seq += o.verdict.failed() ? 1 : 0;
    fin += o.verdict.final_output_failed ? 1 : 0;
    aborts += o.verdict.aborted ? 1 : 0;
    silent += (o.verdict.first_failure && !o.verdict.aborted) ? 1 : 0;
  }
  return {wilson_estimate(seq, trials), wilson_estimate(fin, trials), aborts, silent};
}

}  // namespace mif
