#pragma once

// Command-line front end: run, estimate, space, verify, avoid, params.
// All randomness derives from --seed.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mif/mif.hpp"

namespace mif::cli {

inline constexpr int kSchemaVersion = 1;

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// RFC 4180 quoting for fields that contain separators.
inline std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char ch : v) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

struct GameOptions {
  std::string alg;
  std::string adv = "echo";
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  unsigned parallel = 1;
  bool header = false;
};

inline AlgorithmKind algorithm_kind(const std::string& name) {
  auto k = parse_algorithm_kind(name);
  if (!k) throw ParameterError("unknown algorithm '" + name + "'");
  return *k;
}

inline std::size_t rounds_for(const AdversarySpec& spec, const Instance& inst) {
  if (spec.kind != AdversaryKind::fixed_stream) return inst.r;
  return std::min<std::size_t>(inst.r, spec.stream.size());
}

inline nlohmann::json optional_json(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json transcript_json(const GameOptions& o, const Instance& inst, const Transcript& t) {
  const ValidityReport verdict = check_transcript(inst, t);
  return {{"schema_version", kSchemaVersion},
          {"alg", o.alg},
          {"adv", o.adv},
          {"n", inst.n},
          {"r", inst.r},
          {"delta", inst.delta},
          {"seed", o.seed},
          {"initial_output", *t.initial_output},
          {"inputs", t.inputs},
          {"outputs", t.outputs},
          {"aborted_at", optional_json(t.aborted_at)},
          {"first_failure", optional_json(verdict.first_failure)},
          {"failed", verdict.failed()},
          {"final_output_failed", verdict.final_output_failed},
          {"state_bits", t.state_bits}};
}

inline nlohmann::json params_json(AlgorithmKind kind, const Instance& inst) {
  nlohmann::json j = {{"schema_version", kSchemaVersion},
                      {"alg", std::string(to_string(kind))},
                      {"n", inst.n},
                      {"r", inst.r},
                      {"delta", inst.delta}};
  switch (kind) {
    case AlgorithmKind::trivial: break;
    case AlgorithmKind::classical: j["t"] = classical_params(inst); break;
    case AlgorithmKind::hidden: j["t"] = hidden_list_params(inst); break;
    case AlgorithmKind::zero: j["t"] = inst.r; break;
    case AlgorithmKind::pigeonhole: {
      const auto p = pigeonhole_params(inst);
      j["s"] = p.s;
      j["t"] = p.t;
      break;
    }
    case AlgorithmKind::batch: {
      const auto p = batch_list_params(inst);
      j["fallback"] = p.fallback;
      if (p.fallback) {
        j["reason"] = p.fallback_reason;
      } else {
        j["w"] = p.w;
        j["t"] = p.t;
      }
      break;
    }
  }
  return j;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Missing-item-finding streaming algorithms: games, estimates and exhaustive checks"};
  app.require_subcommand(1);

  GameOptions o;
  auto add_game_flags = [&o](CLI::App* sub, bool with_adv) {
    sub->add_option("--alg", o.alg, "trivial|classical|hidden|zero|pigeonhole|batch")->required();
    if (with_adv) sub->add_option("--adv", o.adv, "static:<csv>|echo|uniform");
    sub->add_option("--n", o.n, "universe size")->required();
    sub->add_option("--r", o.r, "stream length")->required();
    sub->add_option("--delta", o.delta, "target error probability");
  };

  auto* run = app.add_subcommand("run", "play one game and print its transcript as JSON");
  add_game_flags(run, true);
  run->add_option("--seed", o.seed, "master seed");
  std::string dump_path;
  run->add_option("--dump-transcript", dump_path, "also write the transcript to this file");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo error rate with a Wilson 95% interval");
  add_game_flags(estimate, true);
  estimate->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  estimate->add_option("--seed", o.seed);
  estimate->add_option("--parallel", o.parallel)->check(CLI::PositiveNumber);
  estimate->add_flag("--header", o.header, "print the column names first");

  auto* space = app.add_subcommand("space", "encoded state size over many games");
  add_game_flags(space, true);
  space->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  space->add_option("--seed", o.seed);
  space->add_option("--parallel", o.parallel)->check(CLI::PositiveNumber);
  space->add_flag("--header", o.header, "print the column names first");

  auto* verify = app.add_subcommand("verify", "check every stream for each small (n, r)");
  std::uint64_t max_n = 6, max_r = 5;
  verify->add_option("--alg", o.alg)->required();
  verify->add_option("--max-n", max_n)->required();
  verify->add_option("--max-r", max_r)->required();
  verify->add_option("--delta", o.delta);
  verify->add_option("--seed", o.seed, "seed fixing the randomized algorithms");

  auto* avoid = app.add_subcommand("avoid", "minimum messages of a deterministic AVOID(t,a,b) protocol");
  std::uint32_t at = 0, aa = 0, ab = 0;
  avoid->add_option("--t", at)->required();
  avoid->add_option("--a", aa)->required();
  avoid->add_option("--b", ab)->required();
  avoid->add_flag("--header", o.header);

  auto* params = app.add_subcommand("params", "derived parameters as JSON");
  add_game_flags(params, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run) {
      const Instance inst = new_instance(o.n, o.r, o.delta);
      const AdversarySpec spec = AdversarySpec::parse(o.adv);
      const TrialSeeds seeds = trial_seeds(o.seed, 0);
      AnyAlgorithm alg = AnyAlgorithm::create(algorithm_kind(o.alg), inst, seeds.algorithm);
      AnyAdversary adv = AnyAdversary::create(spec, inst, seeds.adversary);
      const Transcript t = play(alg, adv, rounds_for(spec, inst));
      const auto j = transcript_json(o, inst, t);
      out << j.dump() << '\n';
      if (!dump_path.empty()) {
        std::ofstream f(dump_path);
        if (!f) throw std::runtime_error("cannot open " + dump_path);
        f << j.dump(2) << '\n';
      }
      return 0;
    }
    if (*estimate || *space) {
      const Instance inst = new_instance(o.n, o.r, o.delta);
      const AdversarySpec spec = AdversarySpec::parse(o.adv);
      const AlgorithmKind kind = algorithm_kind(o.alg);
      auto make_alg = [kind](const Instance& i, std::uint64_t s) { return AnyAlgorithm::create(kind, i, s); };
      auto make_adv = [&spec](const Instance& i, std::uint64_t s) { return AnyAdversary::create(spec, i, s); };
      const std::size_t rounds = rounds_for(spec, inst);
      if (*estimate) {
        const ErrorReport rep = estimate_error(make_alg, make_adv, inst, o.trials, o.seed, o.parallel, rounds);
        if (o.header) out << "alg,adv,n,r,delta,trials,failures,point,ci_low,ci_high\n";
        const ErrorEstimate& e = rep.sequence;
        out << o.alg << ',' << csv_field(spec.label()) << ',' << inst.n << ',' << inst.r << ',' << fmt_double(inst.delta)
            << ',' << e.trials << ',' << e.failures << ',' << fmt_double(e.point) << ',' << fmt_double(e.ci_low)
            << ',' << fmt_double(e.ci_high) << '\n';
      } else {
        const SpaceReport rep = space_profile(make_alg, make_adv, inst, o.trials, o.seed, o.parallel, rounds);
        if (o.header) out << "alg,model,max_state_bits,mean_state_bits,oracle_random_bits,seed_bits\n";
        out << o.alg << ',' << to_string(rep.model) << ',' << rep.max_state_bits << ','
            << fmt_double(rep.mean_state_bits) << ',' << rep.oracle_random_bits << ',' << rep.seed_bits << '\n';
      }
      return 0;
    }
    if (*verify) {
      const AlgorithmKind kind = algorithm_kind(o.alg);
      bool all_pass = true;
      out << "n,r,result,streams,aborted_streams,counterexample\n";
      for (std::uint64_t n = 2; n <= max_n; ++n) {
        for (std::uint64_t r = 1; r < n && r <= max_r; ++r) {
          const Instance inst = new_instance(n, r, o.delta);
          const AnyAlgorithm alg = AnyAlgorithm::create(kind, inst, trial_seeds(o.seed, 0).algorithm);
          const VerifyResult res = exhaustive_verify(alg);
          all_pass = all_pass && res.pass;
          std::string cex;
          for (std::size_t i = 0; i < res.counterexample.size(); ++i)
            cex += (i ? " " : "") + std::to_string(res.counterexample[i]);
          out << n << ',' << r << ',' << (res.pass ? "pass" : "fail") << ',' << res.streams << ','
              << res.aborted_streams << ',' << cex << '\n';
        }
      }
      return all_pass ? 0 : 1;
    }
    if (*avoid) {
      const std::uint64_t m = avoid_min_messages(at, aa, ab);
      if (o.header) out << "t,a,b,min_messages,lower_bound_a_plus_1\n";
      out << at << ',' << aa << ',' << ab << ',' << m << ',' << (aa + 1) << '\n';
      return 0;
    }
    if (*params) {
      const Instance inst = new_instance(o.n, o.r, o.delta);
      out << params_json(algorithm_kind(o.alg), inst).dump() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace mif::cli
