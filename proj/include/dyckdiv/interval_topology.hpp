#pragma once

#include <cstddef>
#include <vector>

#include "dyckdiv/positive_set.hpp"
#include "dyckdiv/rational.hpp"

namespace dyckdiv {

/// One connected component of T(L; t) with L = {ln s : s ∈ S}, t = ln λ,
/// kept multiplicatively: the component is [ln start, ln(λ·end)].
struct Span {
  Rational start;
  Rational end;

  friend bool operator==(const Span&, const Span&) = default;
};

struct ComponentReport {
  Rational lambda;
  std::size_t count = 0;
  std::vector<Span> spans;  // sorted; λ·spans[i].end < spans[i+1].start
};

// Connected components of ⋃ [ln s, ln s + ln λ], decided by comparing λ·s_i
// with s_{i+1}. Touching intervals are connected. Throws unless λ > 1.
ComponentReport components(const PositiveSet& set, const Rational& lambda);

// Independent count: union-find over the pairwise overlap graph of the
// intervals [s, λ·s]. Throws unless λ > 1.
std::size_t components_graph_oracle(const PositiveSet& set, const Rational& lambda);

/**
 * The step function λ ↦ components(S, λ).count on (1, ∞).
 *
 * The count can only change at singular values b_0 < b_1 < ... of S.
 * values[0] is the count on (1, b_0); values[i + 1] is the count sampled at the
 * exact midpoint of (b_i, b_{i+1}) (or at b_last + 1). at_breakpoint[i] is the
 * count evaluated exactly at b_i.
 */
struct StepFunctionReport {
  std::vector<Rational> breakpoints;
  std::vector<std::size_t> values;
  std::vector<std::size_t> at_breakpoint;

  // Value at b_i equals the value just above b_i, for every i.
  bool right_continuous() const;
  // Piecewise-constant lookup, assuming right-continuity. Requires λ > 1.
  std::size_t value_at(const Rational& lambda) const;
};

// Throws std::invalid_argument on an empty set.
StepFunctionReport step_function(const PositiveSet& set);

}  // namespace dyckdiv
