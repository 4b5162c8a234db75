#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dyckdiv/rational.hpp"

namespace dyckdiv {

/// Finite set of strictly positive rationals, stored in increasing order.
class PositiveSet {
public:
  PositiveSet() = default;

  // Sorts and silently merges duplicates; throws std::invalid_argument if
  // any element is not strictly positive.
  explicit PositiveSet(std::vector<Rational> values);
  PositiveSet(std::initializer_list<Rational> values) : PositiveSet(std::vector<Rational>(values)) {}

  std::span<const Rational> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Rational& value) const;

  // "{1, 2, 5/2}"
  std::string to_string() const;

  friend bool operator==(const PositiveSet&, const PositiveSet&) = default;

private:
  std::vector<Rational> elements_;
};

enum class Membership { SOnly, LambdaOnly, Both };

struct TaggedValue {
  Rational value;
  Membership tag;

  friend bool operator==(const TaggedValue&, const TaggedValue&) = default;
};

// {λ·s : s ∈ S}; throws std::invalid_argument unless λ > 0.
PositiveSet scale_set(const PositiveSet& set, const Rational& lambda);

// Increasing values of S ∪ λS, each tagged by membership in S \ λS, λS \ S or
// S ∩ λS. Throws std::invalid_argument unless λ > 1.
std::vector<TaggedValue> tagged_merge(const PositiveSet& set, const Rational& lambda);

// All quotients s'/s > 1 with s, s' ∈ S: exactly the λ > 1 for which S and λS meet.
PositiveSet singular_values(const PositiveSet& set);

// Smallest singular value strictly above λ, if any. Throws unless λ > 1.
std::optional<Rational> next_singular_above(const PositiveSet& set, const Rational& lambda);

}  // namespace dyckdiv
