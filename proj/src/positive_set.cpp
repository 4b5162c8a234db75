#include "dyckdiv/positive_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckdiv {

namespace {

void require_above_one(const Rational& lambda) {
  if (lambda <= Rational(1))
    throw std::invalid_argument("lambda must exceed 1, got " + lambda.to_string());
}

}  // namespace

PositiveSet::PositiveSet(std::vector<Rational> values) : elements_(std::move(values)) {
  for (const auto& v : elements_)
    if (v.sign() <= 0)
      throw std::invalid_argument("set element must be positive, got " + v.to_string());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PositiveSet::contains(const Rational& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string PositiveSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i != 0) out += ", ";
    out += elements_[i].to_string();
  }
  return out + "}";
}

PositiveSet scale_set(const PositiveSet& set, const Rational& lambda) {
  if (lambda.sign() <= 0)
    throw std::invalid_argument("scale factor must be positive, got " + lambda.to_string());
  std::vector<Rational> scaled;
  scaled.reserve(set.size());
  for (const auto& s : set) scaled.push_back(lambda * s);
  return PositiveSet(std::move(scaled));
}

std::vector<TaggedValue> tagged_merge(const PositiveSet& set, const Rational& lambda) {
  require_above_one(lambda);
  std::vector<TaggedValue> merged;
  merged.reserve(2 * set.size());

  // λS is increasing because λ > 0, so a two-way merge suffices.
  std::size_t i = 0, j = 0;
  const std::size_t m = set.size();
  while (i < m || j < m) {
    if (j == m) {
      merged.push_back({set[i++], Membership::SOnly});
      continue;
    }
    Rational scaled = lambda * set[j];
    if (i == m || scaled < set[i]) {
      merged.push_back({std::move(scaled), Membership::LambdaOnly});
      ++j;
    } else if (set[i] < scaled) {
      merged.push_back({set[i++], Membership::SOnly});
    } else {
      merged.push_back({std::move(scaled), Membership::Both});
      ++i;
      ++j;
    }
  }
  return merged;
}

PositiveSet singular_values(const PositiveSet& set) {
  std::vector<Rational> quotients;
  const std::size_t m = set.size();
  quotients.reserve(m * (m > 0 ? m - 1 : 0) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) quotients.push_back(set[j] / set[i]);
  return PositiveSet(std::move(quotients));
}

std::optional<Rational> next_singular_above(const PositiveSet& set, const Rational& lambda) {
  require_above_one(lambda);
  std::optional<Rational> best;
  const std::size_t m = set.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Rational threshold = lambda * set[i];
    // First s' with s'/s_i > λ, i.e. s' > λ·s_i.
    auto it = std::upper_bound(set.begin() + static_cast<std::ptrdiff_t>(i) + 1, set.end(), threshold);
    if (it == set.end()) continue;
    Rational q = *it / set[i];
    if (!best || q < *best) best = std::move(q);
  }
  return best;
}

}  // namespace dyckdiv
