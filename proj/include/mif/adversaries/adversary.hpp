#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mif/core.hpp"
#include "mif/random.hpp"

namespace mif {

// An adversary picks the next stream element from the outputs seen so far.
// The harness always queries first, so the history handed to next() for
// input e_i is (o_0, ..., o_{i-1}) and is never empty.
template <class Adv>
concept MifAdversary = requires(Adv& adv, std::span<const Element> history) {
  { adv.next(history) } -> std::convertible_to<Element>;
};

// Replays a fixed stream regardless of the outputs.
class StaticAdversary {
 public:
  explicit StaticAdversary(std::vector<Element> stream) : stream_(std::move(stream)) {}

  Element next(std::span<const Element> history) const {
    if (history.empty()) throw std::invalid_argument("history must start with the initial output");
    const std::size_t i = history.size() - 1;
    if (i >= stream_.size()) throw std::out_of_range("static stream exhausted");
    return stream_[i];
  }

  const std::vector<Element>& stream() const { return stream_; }

 private:
  std::vector<Element> stream_;
};

// Feeds back whatever the algorithm just answered.
class EchoAdversary {
 public:
  Element next(std::span<const Element> history) const {
    if (history.empty()) throw std::invalid_argument("echo adversary needs an output to echo");
    return history.back();
  }
};

// Uniform elements of [n]. The i-th draw depends only on (seed, i).
class UniformAdversary {
 public:
  UniformAdversary(std::uint64_t n, std::uint64_t seed) : n_(n), seed_(seed) {
    if (n == 0) throw ParameterError("n must be positive");
  }

  Element next(std::span<const Element> history) const {
    SeededSource src(derive_trial_seed(seed_, history.size()));
    return src.uniform_below(n_) + 1;
  }

 private:
  std::uint64_t n_;
  std::uint64_t seed_;
};

enum class AdversaryKind { fixed_stream, echo, uniform };

// Command-line style adversary description: "static:<csv>", "echo", "uniform".
struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::echo;
  std::vector<Element> stream;

  static AdversarySpec parse(std::string_view text) {
    AdversarySpec spec;
    if (text == "echo") return spec;
    if (text == "uniform") {
      spec.kind = AdversaryKind::uniform;
      return spec;
    }
    constexpr std::string_view prefix = "static:";
    if (text.substr(0, prefix.size()) != prefix)
      throw ParameterError("adversary must be static:<csv>, echo or uniform");
    spec.kind = AdversaryKind::fixed_stream;
    std::string_view rest = text.substr(prefix.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string item(rest.substr(0, comma));
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      const bool digits = !item.empty() && std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
      if (!digits || used != item.size()) throw ParameterError("bad static stream element '" + item + "'");
      spec.stream.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return spec;
  }

  std::string label() const {
    switch (kind) {
      case AdversaryKind::echo: return "echo";
      case AdversaryKind::uniform: return "uniform";
      case AdversaryKind::fixed_stream: break;
    }
    std::string s = "static:";
    for (std::size_t i = 0; i < stream.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(stream[i]);
    }
    return s;
  }
};

class AnyAdversary {
 public:
  template <class Adv>
  AnyAdversary(Adv adv) : impl_(std::move(adv)) {}

  // A fresh adversary for one game; `seed` only matters for uniform.
  static AnyAdversary create(const AdversarySpec& spec, const Instance& inst, std::uint64_t seed) {
    switch (spec.kind) {
      case AdversaryKind::echo: return EchoAdversary{};
      case AdversaryKind::uniform: return UniformAdversary(inst.n, seed);
      case AdversaryKind::fixed_stream: break;
    }
    if (spec.stream.size() > inst.r) throw ParameterError("static stream longer than r");
    for (Element e : spec.stream)
      if (!inst.contains(e)) throw ParameterError("static stream element outside [n]");
    return StaticAdversary(spec.stream);
  }

  Element next(std::span<const Element> history) {
    return std::visit([history](auto& a) -> Element { return a.next(history); }, impl_);
  }

 private:
  std::variant<StaticAdversary, EchoAdversary, UniformAdversary> impl_;
};

}  // namespace mif
