#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "mif/core.hpp"

namespace mif {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    v *= n - k + i;
    v /= i;
  }
  return v;
}

// Probability over the sampled list that the sampling algorithm with t
// tracked entries fails on `stream`: the list (t+1 distinct uniform elements)
// must land inside the d distinct stream elements, C(d, t+1) / C(n, t+1).
inline Rational exact_classical_failure(std::uint64_t n, std::uint64_t t, std::span<const Element> stream) {
  if (t + 1 > n) throw ParameterError("need t+1 <= n");
  const std::unordered_set<Element> distinct(stream.begin(), stream.end());
  return Rational(binomial(distinct.size(), t + 1), binomial(n, t + 1));
}

}  // namespace mif
