#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "mif/adversaries/adversary.hpp"
#include "mif/algorithms/any_algorithm.hpp"
#include "mif/harness/estimate.hpp"
#include "mif/harness/exact.hpp"
#include "mif/harness/exhaustive.hpp"
#include "mif/harness/play.hpp"
#include "mif/harness/space.hpp"

namespace mif {
namespace {

auto alg_factory(AlgorithmKind kind) {
  return [kind](const Instance& inst, std::uint64_t seed) { return AnyAlgorithm::create(kind, inst, seed); };
}

auto adv_factory(const std::string& spec) {
  return [parsed = AdversarySpec::parse(spec)](const Instance& inst, std::uint64_t seed) {
    return AnyAdversary::create(parsed, inst, seed);
  };
}

// Trivial algorithm that lies: it answers with the most recent input.
class LyingAlgorithm {
 public:
  explicit LyingAlgorithm(const Instance& inst) : inner_(inst) {}
  UpdateStatus update(Element e) {
    last_ = e;
    return inner_.update(e);
  }
  Element query() const { return last_; }
  BitString encode() const { return inner_.encode(); }
  std::size_t encoded_bits() const { return inner_.encoded_bits(); }
  void load(const BitString& b) { inner_.load(b); }
  bool aborted() const { return false; }
  bool sound() const { return true; }
  SpaceAccounting accounting() const { return inner_.accounting(); }
  const Instance& instance() const { return inner_.instance(); }

 private:
  TrivialAlgorithm inner_;
  Element last_ = 1;
};

TEST(Play, TrivialStaticExample) {
  const auto inst = new_instance(4, 2, 0.1);
  TrivialAlgorithm alg(inst);
  StaticAdversary adv({1, 2});
  const auto t = play(alg, adv);
  EXPECT_EQ(t.initial_output, 1u);
  EXPECT_EQ(t.inputs, (std::vector<Element>{1, 2}));
  EXPECT_EQ(t.outputs, (std::vector<Element>{2, 3}));
  EXPECT_FALSE(t.first_failure);
  EXPECT_FALSE(t.aborted_at);
  EXPECT_EQ(t.state_bits, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_FALSE(check_transcript(inst, t).failed());
}

TEST(Play, HiddenListEchoIsConsistent) {
  const auto inst = new_instance(4, 2, 0.1);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto alg = HiddenListAlgorithm::create(inst, seed);
    EchoAdversary adv;
    const auto t = play(alg, adv);
    const auto v = check_transcript(inst, t);
    EXPECT_FALSE(v.first_failure);
    EXPECT_EQ(v.aborted, t.aborted_at.has_value());
    EXPECT_EQ(v.aborted, alg.aborted());
  }
}

TEST(Play, FallbackRoutesToTrivial) {
  const auto inst = new_instance(64, 4, 0.9);
  auto batch = BatchListAlgorithm::create(inst, 1);
  TrivialAlgorithm trivial(inst);
  UniformAdversary a1(64, 5), a2(64, 5);
  const auto t1 = play(batch, a1);
  const auto t2 = play(trivial, a2);
  EXPECT_EQ(t1.inputs, t2.inputs);
  EXPECT_EQ(t1.outputs, t2.outputs);
  EXPECT_EQ(t1.state_bits, t2.state_bits);
}

TEST(Play, AbortEndsGame) {
  const auto inst = new_instance(9, 3, 0.1);
  HiddenListAlgorithm alg(inst, 1, {4, 7, 2, 9});
  StaticAdversary adv({7, 2, 1});
  const auto t = play(alg, adv);
  EXPECT_EQ(t.aborted_at, 2u);
  EXPECT_EQ(t.inputs.size(), 2u);
  EXPECT_EQ(t.outputs.size(), 1u);
  EXPECT_EQ(t.state_bits.size(), 2u);
  const auto v = check_transcript(inst, t);
  EXPECT_TRUE(v.aborted);
  EXPECT_TRUE(v.failed());
  EXPECT_FALSE(v.first_failure);
}

TEST(Play, RoundLimit) {
  const auto inst = new_instance(10, 4, 0.1);
  TrivialAlgorithm alg(inst);
  EchoAdversary adv;
  EXPECT_EQ(play(alg, adv, 2).inputs.size(), 2u);
  TrivialAlgorithm alg2(inst);
  EXPECT_THROW(play(alg2, adv, 5), std::invalid_argument);
}

TEST(Play, IncrementalVerdictMatchesChecker) {
  for (auto inst : {new_instance(6, 3, 0.2), new_instance(30, 10, 0.5)}) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      auto alg = ClassicalAlgorithm::create(inst, seed);
      auto adv = AnyAdversary::create(AdversarySpec::parse(seed % 2 ? "echo" : "uniform"), inst, seed);
      const auto t = play(alg, adv);
      EXPECT_EQ(t.first_failure, check_transcript(inst, t).first_failure);
    }
  }
}

TEST(Play, SoundnessViolationDetected) {
  const auto inst = new_instance(5, 3, 0.1);
  LyingAlgorithm alg(inst);
  StaticAdversary adv({2, 3, 4});
  EXPECT_THROW(play(alg, adv), SoundnessViolation);
}

// ---- exact failure ------------------------------------------------------

// Fraction of ordered lists of t+1 distinct elements of [n] that lie inside
// the stream's distinct elements.
Rational classical_failure_by_enumeration(std::uint64_t n, std::uint64_t t, const std::vector<Element>& stream) {
  const std::set<Element> seen(stream.begin(), stream.end());
  std::uint64_t total = 0, bad = 0;
  std::vector<Element> list;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto& self) -> void {
    if (list.size() == t + 1) {
      ++total;
      bool inside = true;
      for (Element e : list) inside = inside && seen.contains(e);
      bad += inside ? 1 : 0;
      return;
    }
    for (Element e = 1; e <= n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      list.push_back(e);
      self(self);
      list.pop_back();
      used[e] = false;
    }
  };
  rec(rec);
  return Rational(bad, total);
}

TEST(ExactClassicalFailure, Examples) {
  const std::vector<Element> five{1, 2, 3, 4, 5};
  EXPECT_EQ(exact_classical_failure(10, 4, five), Rational(1, 252));
  EXPECT_EQ(exact_classical_failure(10, 3, five), Rational(5, 210));
  EXPECT_EQ(exact_classical_failure(10, 5, five), Rational(0));
  const std::vector<Element> three{1, 2, 2, 3};
  EXPECT_EQ(exact_classical_failure(4, 0, three), Rational(3, 4));
  EXPECT_THROW(exact_classical_failure(3, 3, three), ParameterError);
}

TEST(ExactClassicalFailure, MatchesEnumeration) {
  for (std::uint64_t n = 2; n <= 7; ++n)
    for (std::uint64_t t = 0; t + 1 <= n && t <= 3; ++t)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SeededSource src(seed * 31 + n);
        std::vector<Element> stream;
        for (std::uint64_t i = 0; i < n; ++i) stream.push_back(src.uniform_below(n) + 1);
        EXPECT_EQ(exact_classical_failure(n, t, stream), classical_failure_by_enumeration(n, t, stream));
      }
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(10, 4), 210);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

// ---- estimation ----------------------------------------------------------

// Wilson bounds as the two roots of (p - phat)^2 = z^2 p (1 - p) / n.
std::pair<double, double> wilson_roots(double k, double n, double z) {
  const double ph = k / n, z2 = z * z;
  const double a = 1 + z2 / n, b = -(2 * ph + z2 / n), c = ph * ph;
  const double disc = std::sqrt(b * b - 4 * a * c);
  return {(-b - disc) / (2 * a), (-b + disc) / (2 * a)};
}

TEST(Wilson, MatchesQuadraticRoots) {
  for (auto [k, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 100}, {1, 10}, {50, 100}, {999, 1000}, {3, 100000}}) {
    const auto e = wilson_estimate(k, n);
    const auto [lo, hi] = wilson_roots(static_cast<double>(k), static_cast<double>(n), 1.959963984540054);
    EXPECT_NEAR(e.ci_low, lo, 1e-12);
    EXPECT_NEAR(e.ci_high, hi, 1e-12);
    EXPECT_EQ(e.method, "wilson");
  }
}

TEST(Wilson, Invariants) {
  for (std::uint64_t n : {1ull, 2ull, 7ull, 100ull, 12345ull})
    for (std::uint64_t k = 0; k <= n; k += std::max<std::uint64_t>(1, n / 13)) {
      const auto e = wilson_estimate(k, n);
      EXPECT_LE(0.0, e.ci_low);
      EXPECT_LE(e.ci_low, e.point);
      EXPECT_LE(e.point, e.ci_high);
      EXPECT_LE(e.ci_high, 1.0);
      EXPECT_LE(e.failures, e.trials);
    }
  EXPECT_EQ(wilson_estimate(0, 50).ci_low, 0.0);
  EXPECT_EQ(wilson_estimate(50, 50).ci_high, 1.0);
}

TEST(EstimateError, TrivialNeverFails) {
  for (const char* adv : {"echo", "uniform"}) {
    const auto rep = estimate_error(alg_factory(AlgorithmKind::trivial), adv_factory(adv), new_instance(20, 10, 0.1), 500, 3);
    EXPECT_EQ(rep.sequence.failures, 0u);
    EXPECT_EQ(rep.final_output.failures, 0u);
    EXPECT_EQ(rep.aborts, 0u);
  }
}

TEST(EstimateError, ClassicalMatchesExactRate) {
  const auto inst = new_instance(10, 5, 0.1);
  const std::vector<Element> stream{1, 2, 3, 4, 5};
  constexpr std::uint64_t kTrials = 20'000;
  const auto rep = estimate_error(alg_factory(AlgorithmKind::classical), adv_factory("static:1,2,3,4,5"), inst, kTrials, 11);
  const double p = exact_classical_failure(10, classical_params(inst), stream).convert_to<double>();
  const double sigma = std::sqrt(p * (1 - p) / kTrials);
  EXPECT_NEAR(rep.final_output.point, p, 3 * sigma);
  EXPECT_GE(rep.sequence.failures, rep.final_output.failures);
}

TEST(EstimateError, ParallelMatchesSerial) {
  const auto inst = new_instance(200, 20, 0.1);
  for (auto kind : {AlgorithmKind::hidden, AlgorithmKind::classical}) {
    const auto a = estimate_error(alg_factory(kind), adv_factory("uniform"), inst, 2000, 5, 1);
    const auto b = estimate_error(alg_factory(kind), adv_factory("uniform"), inst, 2000, 5, 4);
    EXPECT_EQ(a.sequence.failures, b.sequence.failures);
    EXPECT_EQ(a.final_output.failures, b.final_output.failures);
    EXPECT_EQ(a.aborts, b.aborts);
  }
}

TEST(EstimateError, ReproducibleAndSeedSensitive) {
  const auto inst = new_instance(10, 5, 0.5);
  auto run = [&](std::uint64_t seed) {
    return estimate_error(alg_factory(AlgorithmKind::classical), adv_factory("uniform"), inst, 3000, seed).sequence.failures;
  };
  EXPECT_EQ(run(1), run(1));
  std::set<std::uint64_t> distinct{run(1), run(2), run(3), run(4)};
  EXPECT_GT(distinct.size(), 1u);
}

TEST(EstimateError, WorkerExceptionsPropagate) {
  auto lying = [](const Instance& inst, std::uint64_t) { return LyingAlgorithm(inst); };
  EXPECT_THROW(estimate_error(lying, adv_factory("uniform"), new_instance(5, 3, 0.1), 10, 0, 3), SoundnessViolation);
  EXPECT_THROW(estimate_error(lying, adv_factory("uniform"), new_instance(5, 3, 0.1), 0, 0), ParameterError);
}

// ---- space -------------------------------------------------------------

TEST(SpaceProfile, TrivialIsExactlyR) {
  const auto rep = space_profile(alg_factory(AlgorithmKind::trivial), adv_factory("uniform"), new_instance(50, 13, 0.1), 50, 1);
  EXPECT_EQ(rep.max_state_bits, 13u);
  EXPECT_EQ(rep.mean_state_bits, 13.0);
  EXPECT_EQ(rep.model, RandomnessModel::deterministic);
  EXPECT_EQ(rep.oracle_random_bits, 0u);
}

TEST(SpaceProfile, PigeonholeWithinBound) {
  const auto inst = new_instance(25, 8, 0.1);
  const auto p = pigeonhole_params(inst);
  for (const char* adv : {"echo", "uniform"}) {
    const auto rep = space_profile(alg_factory(AlgorithmKind::pigeonhole), adv_factory(adv), inst, 200, 2);
    EXPECT_LE(rep.max_state_bits, p.s + p.t * ceil_log2(p.s) + 1);
  }
}

TEST(SpaceProfile, ZeroErrorUsesStepMean) {
  const auto inst = new_instance(100, 10, 0.1);
  const auto rep = space_profile(alg_factory(AlgorithmKind::zero), adv_factory("uniform"), inst, 2000, 4);
  EXPECT_TRUE(rep.expected_cost);
  EXPECT_EQ(rep.mean_state_bits, rep.mean_step_bits);
  EXPECT_LE(rep.mean_step_bits, rep.mean_trial_max_bits);
  EXPECT_GE(rep.mean_step_bits, 8.0);  // empty J costs ceil(log 11) + ceil(log 10)
  EXPECT_LE(rep.mean_step_bits, 4 + 4 * (1 + 0.9) + 0.5);
  EXPECT_GT(rep.oracle_random_bits, 0u);
}

TEST(SpaceProfile, InvariantsAcrossKinds) {
  const auto inst = new_instance(3000, 30, 0.2);
  for (auto kind : {AlgorithmKind::trivial, AlgorithmKind::classical, AlgorithmKind::hidden, AlgorithmKind::zero,
                    AlgorithmKind::pigeonhole, AlgorithmKind::batch}) {
    const auto rep = space_profile(alg_factory(kind), adv_factory("uniform"), inst, 100, 9);
    EXPECT_LE(rep.mean_state_bits, static_cast<double>(rep.max_state_bits)) << to_string(kind);
    EXPECT_LE(rep.mean_step_bits, rep.mean_trial_max_bits) << to_string(kind);
    if (rep.model == RandomnessModel::seed) EXPECT_LE(rep.seed_bits, rep.max_state_bits);
    else EXPECT_EQ(rep.seed_bits, 0u);
  }
}

TEST(SpaceProfile, DeterministicIgnoresSeed) {
  const auto inst = new_instance(500, 40, 0.2);
  for (auto kind : {AlgorithmKind::trivial, AlgorithmKind::pigeonhole}) {
    const auto a = space_profile(alg_factory(kind), adv_factory("echo"), inst, 20, 1);
    const auto b = space_profile(alg_factory(kind), adv_factory("echo"), inst, 20, 987654);
    EXPECT_EQ(a.max_state_bits, b.max_state_bits);
    EXPECT_EQ(a.mean_state_bits, b.mean_state_bits);
  }
}

// ---- exhaustive --------------------------------------------------------

TEST(ExhaustiveVerify, PassCases) {
  const auto res = exhaustive_verify(TrivialAlgorithm(new_instance(6, 5, 0.1)));
  EXPECT_TRUE(res.pass);
  EXPECT_EQ(res.streams, 7776u);
  EXPECT_TRUE(res.counterexample.empty());
}

TEST(ExhaustiveVerify, FixedSeedClassicalFails) {
  const auto inst = new_instance(6, 3, 0.2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto alg = ClassicalAlgorithm::create(inst, seed);
    const auto res = exhaustive_verify(alg);
    ASSERT_FALSE(res.pass);
    EXPECT_EQ(res.failing_step, 3u);
    const std::set<Element> ce(res.counterexample.begin(), res.counterexample.end());
    for (Element e : alg.list()) EXPECT_TRUE(ce.contains(e));
  }
}

TEST(ExhaustiveVerify, IntermediateCheckCatchesEarlyFailure) {
  // Tracks nothing, so the fixed answer L_1 can be hit on the first step.
  const auto inst = new_instance(4, 2, 1.0);
  ClassicalAlgorithm alg(inst, 0, {1});
  const auto strict = exhaustive_verify(alg, true);
  EXPECT_FALSE(strict.pass);
  EXPECT_EQ(strict.counterexample, std::vector<Element>{1});
  const auto lenient = exhaustive_verify(alg, false);
  EXPECT_EQ(lenient.counterexample, (std::vector<Element>{1, 1}));
}

TEST(ExhaustiveVerify, CountsAborts) {
  HiddenListAlgorithm alg(new_instance(4, 3, 0.1), 1, {1, 2, 3, 4});
  const auto res = exhaustive_verify(alg);
  EXPECT_TRUE(res.pass);
  EXPECT_GT(res.aborted_streams, 0u);
  EXPECT_LT(res.aborted_streams, res.streams);
}

TEST(ExhaustiveVerify, SizeGuard) {
  EXPECT_THROW(exhaustive_verify(TrivialAlgorithm(new_instance(11, 6, 0.1))), ParameterError);
  EXPECT_NO_THROW(exhaustive_verify(TrivialAlgorithm(new_instance(10, 6, 0.1))));
}

TEST(ReachableStates, TrivialSubsets) {
  for (std::uint64_t r = 1; r <= 5; ++r) {
    const auto rs = reachable_states(TrivialAlgorithm(new_instance(r + 2, r, 0.1)));
    EXPECT_EQ(rs.count, 1u << r);
    EXPECT_EQ(rs.max_bits, r);
  }
}

TEST(ReachableStates, PigeonholeLargeUniverse) {
  const auto inst = new_instance(25, 8, 0.1);
  const auto p = pigeonhole_params(inst);
  const auto rs = reachable_states(PigeonholeAlgorithm(inst));
  EXPECT_LE(rs.max_bits, p.s + p.t * ceil_log2(p.s) + 1);
  EXPECT_GT(rs.count, 1u);
}

}  // namespace
}  // namespace mif
