#include "dyckdiv/interval_topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dyckdiv {

namespace {

void require_above_one(const Rational& lambda) {
  if (lambda <= Rational(1))
    throw std::invalid_argument("lambda must exceed 1, got " + lambda.to_string());
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), count_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void merge(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent_[y] = x;
    --count_;
  }

  std::size_t count() const { return count_; }

private:
  std::vector<std::size_t> parent_;
  std::size_t count_;
};

}  // namespace

ComponentReport components(const PositiveSet& set, const Rational& lambda) {
  require_above_one(lambda);
  ComponentReport report{lambda, 0, {}};
  if (set.empty()) return report;

  Rational start = set[0];
  for (std::size_t i = 0; i + 1 < set.size(); ++i) {
    if (lambda * set[i] < set[i + 1]) {
      report.spans.push_back({start, set[i]});
      start = set[i + 1];
    }
  }
  report.spans.push_back({start, set[set.size() - 1]});
  report.count = report.spans.size();
  return report;
}

std::size_t components_graph_oracle(const PositiveSet& set, const Rational& lambda) {
  require_above_one(lambda);
  const std::size_t m = set.size();
  DisjointSets dsu(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational hi_i = lambda * set[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational hi_j = lambda * set[j];
      const Rational& lo = std::max(set[i], set[j]);
      const Rational& hi = std::min(hi_i, hi_j);
      if (lo <= hi) dsu.merge(i, j);
    }
  }
  return dsu.count();
}

bool StepFunctionReport::right_continuous() const {
  for (std::size_t i = 0; i < breakpoints.size(); ++i)
    if (at_breakpoint[i] != values[i + 1]) return false;
  return true;
}

std::size_t StepFunctionReport::value_at(const Rational& lambda) const {
  require_above_one(lambda);
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), lambda);
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

StepFunctionReport step_function(const PositiveSet& set) {
  if (set.empty()) throw std::invalid_argument("step function of an empty set");

  StepFunctionReport report;
  const auto singular = singular_values(set);
  report.breakpoints.assign(singular.begin(), singular.end());

  const Rational one(1), two(2);
  const auto count_at = [&](const Rational& lambda) { return components(set, lambda).count; };

  const Rational first_probe = report.breakpoints.empty() ? two : (one + report.breakpoints.front()) / two;
  report.values.push_back(count_at(first_probe));
  for (std::size_t i = 0; i < report.breakpoints.size(); ++i) {
    const Rational& b = report.breakpoints[i];
    const Rational above = i + 1 < report.breakpoints.size() ? (b + report.breakpoints[i + 1]) / two : b + one;
    report.at_breakpoint.push_back(count_at(b));
    report.values.push_back(count_at(above));
  }
  return report;
}

}  // namespace dyckdiv
