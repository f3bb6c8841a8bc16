#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mif/bits.hpp"
#include "mif/core.hpp"

namespace mif {

// Lifecycle shared by every missing-item-finding algorithm.
//
//  - update(e) consumes one stream element in [n]; at most r calls per run.
//  - query() is legal after any prefix, including the empty one, and does not
//    mutate the state. It throws AbortedError once update() has aborted.
//  - encode() is a prefix-free code for the reachable state set; its length is
//    the space measure. encoded_bits() equals encode().size() without
//    materializing the string. load() restores an encoding into an instance
//    built with the same parameters and random oracle.
template <class A>
concept MifAlgorithm = std::copy_constructible<A> &&
    requires(A& a, const A& ca, Element e, const BitString& bits) {
      { a.update(e) } -> std::same_as<UpdateStatus>;
      { ca.query() } -> std::same_as<Element>;
      { ca.encode() } -> std::same_as<BitString>;
      { ca.encoded_bits() } -> std::convertible_to<std::size_t>;
      a.load(bits);
      { ca.aborted() } -> std::same_as<bool>;
      { ca.sound() } -> std::same_as<bool>;
      { ca.accounting() } -> std::same_as<SpaceAccounting>;
      { ca.instance() } -> std::convertible_to<const Instance&>;
    };

namespace detail {

// Contract checks common to every update(): element range, stream length and
// the terminal abort state.
inline void begin_update(const Instance& inst, std::uint64_t& steps, bool aborted, Element e) {
  if (aborted) throw AbortedError();
  if (!inst.contains(e)) throw std::out_of_range("stream element outside [n]: " + std::to_string(e));
  if (steps >= inst.r) throw std::logic_error("more than r updates");
  ++steps;
}

}  // namespace detail

}  // namespace mif
