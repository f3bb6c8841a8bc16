#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "mif/core.hpp"

namespace mif {

// One game between an algorithm and an adversary, in transcript order
// o_0, e_1, o_1, e_2, ... All indices are 1-based.
struct Transcript {
  std::optional<Element> initial_output;  // o_0, the answer on the empty prefix
  std::vector<Element> inputs;            // e_1 .. e_k
  std::vector<Element> outputs;           // o_1 .. o_k; o_k missing if e_k aborted the run
  std::optional<std::size_t> aborted_at;  // index of the input that triggered abort
  std::optional<std::size_t> first_failure;
  // Encoded state length before the first input and after each accepted input.
  std::vector<std::size_t> state_bits;
};

struct ValidityReport {
  // Least i with outputs[i] in {inputs[1..i]}.
  std::optional<std::size_t> first_failure;
  bool aborted = false;
  // Static judgment: only the answer after the last input counts.
  bool final_output_failed = false;

  // Adversarial judgment: any invalid output, or an abort.
  bool failed() const { return first_failure.has_value() || aborted; }
};

inline ValidityReport check_transcript(const Instance& inst, const Transcript& t) {
  const std::size_t k = t.inputs.size();
  if (k > inst.r) throw std::invalid_argument("transcript longer than r");
  if (t.aborted_at) {
    if (*t.aborted_at != k || k == 0 || t.outputs.size() != k - 1)
      throw std::invalid_argument("aborted transcript must end at the aborting input");
  } else if (t.outputs.size() != k) {
    throw std::invalid_argument("inputs and outputs differ in length");
  }
  for (Element e : t.inputs)
    if (!inst.contains(e)) throw std::invalid_argument("transcript input outside [n]");
  for (Element o : t.outputs)
    if (!inst.contains(o)) throw std::invalid_argument("transcript output outside [n]");

  ValidityReport report;
  report.aborted = t.aborted_at.has_value();
  std::unordered_set<Element> seen;
  for (std::size_t i = 0; i < t.outputs.size(); ++i) {
    seen.insert(t.inputs[i]);
    if (!report.first_failure && seen.contains(t.outputs[i])) report.first_failure = i + 1;
  }
  if (report.aborted) {
    report.final_output_failed = true;
  } else if (k > 0) {
    seen.insert(t.inputs[k - 1]);
    report.final_output_failed = seen.contains(t.outputs[k - 1]);
  }
  return report;
}

}  // namespace mif
