#pragma once

// Parameter formulas for the sampling, hidden-list, iterated-pigeonhole and
// batch-list algorithms. "log" is base 2 and "ln" natural throughout.
//
// Formulas are evaluated in binary64. Floors and ceilings carry a 1e-9 slack so
// that decimal inputs which are mathematically integral (e.g. log(1e30)/log(1e5))
// land on the intended integer; integral side conditions are then re-checked
// exactly and repaired by a unit step if the slack overshot.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "mif/core.hpp"

namespace mif {

namespace detail {

inline constexpr double kRoundingSlack = 1e-9;

inline std::uint64_t floor_slack(double x) {
  return static_cast<std::uint64_t>(std::floor(x + kRoundingSlack));
}

inline std::uint64_t ceil_slack(double x) {
  double c = std::ceil(x - kRoundingSlack);
  return c <= 0 ? 0 : static_cast<std::uint64_t>(c);
}

// base^exp, or nullopt once it exceeds `cap`.
inline std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return std::nullopt;
    v *= base;
    if (v > cap) return std::nullopt;
  }
  return v;
}

}  // namespace detail

// t = min(r, floor(log(1/delta) / log(n/r))).
inline std::uint64_t classical_params(const Instance& inst) {
  const double log_inv_delta = -std::log2(inst.delta);
  if (log_inv_delta <= 0) return 0;  // delta == 1: nothing to track
  const double log_ratio = std::log2(static_cast<double>(inst.n)) - std::log2(static_cast<double>(inst.r));
  // The quotient explodes as n/r -> 1; the cap at r applies first.
  if (log_ratio <= log_inv_delta / static_cast<double>(inst.r)) return inst.r;
  return std::min(inst.r, detail::floor_slack(log_inv_delta / log_ratio));
}

// t = min(r, ceil(3 r^2 / n + ln(1/delta))).
inline std::uint64_t hidden_list_params(const Instance& inst) {
  const double r = static_cast<double>(inst.r);
  const double v = 3.0 * r * r / static_cast<double>(inst.n) + std::log(1.0 / inst.delta);
  return std::min(inst.r, std::max<std::uint64_t>(1, detail::ceil_slack(v)));
}

struct PigeonholeParams {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
};

// q = min(sqrt(r log(r+1)), log n), t = floor(q / log(r+1)), s = ceil(r/t) + 1,
// so that s^t <= n and t(s-1) >= r.
inline PigeonholeParams pigeonhole_params(const Instance& inst) {
  const double r = static_cast<double>(inst.r);
  const double log_r1 = std::log2(r + 1.0);
  const double q = std::min(std::sqrt(r * log_r1), std::log2(static_cast<double>(inst.n)));
  std::uint64_t t = std::max<std::uint64_t>(1, detail::floor_slack(q / log_r1));
  auto s_for = [&](std::uint64_t tt) { return (inst.r + tt - 1) / tt + 1; };
  std::uint64_t s = s_for(t);
  while (t > 1 && !detail::bounded_pow(s, t, inst.n)) {
    --t;
    s = s_for(t);
  }
  if (!detail::bounded_pow(s, t, inst.n) || t * (s - 1) < inst.r)
    throw std::logic_error("pigeonhole parameters violate s^t <= n or t(s-1) >= r");
  return {s, t};
}

struct BatchListParams {
  bool fallback = false;
  std::string fallback_reason;
  std::uint64_t w = 0;  // block size
  std::uint64_t t = 0;  // hidden list length
};

// Requires r < n/32 and delta >= e^(-r/6); otherwise the trivial algorithm is
// used. w = floor(min(sqrt(r log n), n/(32 r), r/(6 ln(1/delta)))), t = ceil(2r/w).
inline BatchListParams batch_list_params(const Instance& inst) {
  BatchListParams p;
  if (32 * inst.r >= inst.n) {
    p.fallback = true;
    p.fallback_reason = "r >= n/32";
    return p;
  }
  const double r = static_cast<double>(inst.r);
  if (inst.delta < std::exp(-r / 6.0)) {
    p.fallback = true;
    p.fallback_reason = "delta < e^(-r/6)";
    return p;
  }
  const double n = static_cast<double>(inst.n);
  const double ln_inv = std::log(1.0 / inst.delta);
  const double by_delta = ln_inv > 0 ? r / (6.0 * ln_inv) : std::numeric_limits<double>::infinity();
  double m = std::min({std::sqrt(r * std::log2(n)), n / (32.0 * r), by_delta});
  std::uint64_t w = std::max<std::uint64_t>(1, detail::floor_slack(m));
  while (w > 1 && 32 * inst.r * w > inst.n) --w;
  p.w = w;
  p.t = (2 * inst.r + w - 1) / w;
  assert(p.t <= inst.n / w);
  return p;
}

}  // namespace mif
