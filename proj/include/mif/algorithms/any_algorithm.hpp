#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mif/algorithms/batch_list.hpp"
#include "mif/algorithms/classical.hpp"
#include "mif/algorithms/hidden_list.hpp"
#include "mif/algorithms/pigeonhole.hpp"
#include "mif/algorithms/trivial.hpp"

namespace mif {

enum class AlgorithmKind { trivial, classical, hidden, zero, pigeonhole, batch };

inline std::string_view to_string(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::trivial: return "trivial";
    case AlgorithmKind::classical: return "classical";
    case AlgorithmKind::hidden: return "hidden";
    case AlgorithmKind::zero: return "zero";
    case AlgorithmKind::pigeonhole: return "pigeonhole";
    case AlgorithmKind::batch: return "batch";
  }
  return "?";
}

inline std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view s) {
  for (auto k : {AlgorithmKind::trivial, AlgorithmKind::classical, AlgorithmKind::hidden, AlgorithmKind::zero,
                 AlgorithmKind::pigeonhole, AlgorithmKind::batch})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

// Runtime-selected algorithm with the same lifecycle as the concrete types.
class AnyAlgorithm {
 public:
  using Variant = std::variant<TrivialAlgorithm, ClassicalAlgorithm, HiddenListAlgorithm, PigeonholeAlgorithm,
                               BatchListAlgorithm>;

  template <class A>
  AnyAlgorithm(A alg) : kind_(kind_of(alg)), impl_(std::move(alg)) {}

  static AnyAlgorithm create(AlgorithmKind kind, const Instance& inst, std::uint64_t seed) {
    switch (kind) {
      case AlgorithmKind::trivial: return TrivialAlgorithm::create(inst, seed);
      case AlgorithmKind::classical: return ClassicalAlgorithm::create(inst, seed);
      case AlgorithmKind::hidden: return HiddenListAlgorithm::create(inst, seed);
      case AlgorithmKind::zero: return HiddenListAlgorithm::create_zero_error(inst, seed);
      case AlgorithmKind::pigeonhole: return PigeonholeAlgorithm::create(inst, seed);
      case AlgorithmKind::batch: return BatchListAlgorithm::create(inst, seed);
    }
    throw std::invalid_argument("unknown algorithm kind");
  }

  AlgorithmKind kind() const { return kind_; }

  UpdateStatus update(Element e) {
    return std::visit([e](auto& a) { return a.update(e); }, impl_);
  }
  Element query() const {
    return std::visit([](const auto& a) { return a.query(); }, impl_);
  }
  BitString encode() const {
    return std::visit([](const auto& a) { return a.encode(); }, impl_);
  }
  std::size_t encoded_bits() const {
    return std::visit([](const auto& a) { return a.encoded_bits(); }, impl_);
  }
  void load(const BitString& bits) {
    std::visit([&bits](auto& a) { a.load(bits); }, impl_);
  }
  bool aborted() const {
    return std::visit([](const auto& a) { return a.aborted(); }, impl_);
  }
  bool sound() const {
    return std::visit([](const auto& a) { return a.sound(); }, impl_);
  }
  SpaceAccounting accounting() const {
    return std::visit([](const auto& a) { return a.accounting(); }, impl_);
  }
  const Instance& instance() const {
    return std::visit([](const auto& a) -> const Instance& { return a.instance(); }, impl_);
  }

  const Variant& get() const { return impl_; }

 private:
  static AlgorithmKind kind_of(const TrivialAlgorithm&) { return AlgorithmKind::trivial; }
  static AlgorithmKind kind_of(const ClassicalAlgorithm&) { return AlgorithmKind::classical; }
  static AlgorithmKind kind_of(const HiddenListAlgorithm& a) {
    return a.accounting().expected_cost ? AlgorithmKind::zero : AlgorithmKind::hidden;
  }
  static AlgorithmKind kind_of(const PigeonholeAlgorithm&) { return AlgorithmKind::pigeonhole; }
  static AlgorithmKind kind_of(const BatchListAlgorithm&) { return AlgorithmKind::batch; }

  AlgorithmKind kind_;
  Variant impl_;
};

}  // namespace mif
