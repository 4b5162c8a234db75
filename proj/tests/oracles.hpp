#pragma once

// Brute-force constructions used only by the tests. None of these call into
// the library's merge, factorization or component code.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dyckdiv/positive_set.hpp"
#include "dyckdiv/rational.hpp"

namespace dyckdiv::testing {

inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline PositiveSet divisor_set_by_scan(std::uint64_t n) {
  const auto ds = divisors_by_scan(n);
  return PositiveSet(std::vector<Rational>(ds.begin(), ds.end()));
}

inline std::set<Rational> as_set(const PositiveSet& s) { return {s.begin(), s.end()}; }

inline std::set<Rational> scaled(const std::set<Rational>& s, const Rational& lambda) {
  std::set<Rational> out;
  for (const auto& x : s) out.insert(lambda * x);
  return out;
}

// Letters over the sorted symmetric difference, by set membership.
inline std::string class_word_by_sets(const PositiveSet& set, const Rational& lambda) {
  const auto s = as_set(set);
  const auto ls = scaled(s, lambda);
  std::vector<Rational> diff;
  std::set_symmetric_difference(s.begin(), s.end(), ls.begin(), ls.end(), std::back_inserter(diff));
  std::string word;
  for (const auto& x : diff) word += s.count(x) ? 'a' : 'b';
  return word;
}

// Letters over the sorted union, by set membership.
inline std::string hooley_word_by_sets(const PositiveSet& set, const Rational& lambda) {
  const auto s = as_set(set);
  const auto ls = scaled(s, lambda);
  std::set<Rational> all = s;
  all.insert(ls.begin(), ls.end());
  std::string word;
  for (const auto& x : all) {
    const bool in_s = s.count(x) != 0, in_ls = ls.count(x) != 0;
    word += in_s && in_ls ? 'c' : in_s ? 'a' : 'b';
  }
  return word;
}

inline std::vector<Rational> singular_by_pairs(const PositiveSet& set) {
  std::set<Rational> out;
  for (const auto& x : set)
    for (const auto& y : set)
      if (x < y) out.insert(y / x);
  return {out.begin(), out.end()};
}

// Fine rational grid on (0, n]: step 1/(4·den λ) hits every divisor, every λ·d
// and a point strictly between any two consecutive such values.
inline std::vector<Rational> r_grid(std::uint64_t n, const Rational& lambda) {
  const long step_den = 4 * lambda.denominator().get_si();
  std::vector<Rational> grid;
  for (long k = 1; k <= static_cast<long>(n) * step_den; ++k) grid.emplace_back(BigInt(k), BigInt(step_den));
  return grid;
}

// max over grid R of #{d | n : R/λ < d ≤ R}.
inline std::size_t delta_by_grid(std::uint64_t n, const Rational& lambda) {
  const auto ds = divisors_by_scan(n);
  std::size_t best = 0;
  for (const auto& r : r_grid(n, lambda)) {
    const Rational low = r / lambda;
    std::size_t count = 0;
    for (auto d : ds)
      if (low < Rational(d) && Rational(d) <= r) ++count;
    best = std::max(best, count);
  }
  return best;
}

// For all grid R in [1, n], some divisor lies in [R/λ, R].
inline bool dense_by_grid(std::uint64_t n, const Rational& lambda) {
  const auto ds = divisors_by_scan(n);
  for (const auto& r : r_grid(n, lambda)) {
    if (r < Rational(1)) continue;
    const Rational low = r / lambda;
    const bool hit = std::any_of(ds.begin(), ds.end(), [&](auto d) { return low <= Rational(d) && Rational(d) <= r; });
    if (!hit) return false;
  }
  return true;
}

// Reproducible random instances.
class Generator {
public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Positive rational with numerator and denominator in [1, bound].
  Rational positive_rational(long bound) { return Rational(BigInt(uniform(1, bound)), BigInt(uniform(1, bound))); }

  // Rational in (1, bound/1] with numerator and denominator ≤ bound.
  Rational lambda_above_one(long bound) {
    const long q = uniform(1, bound - 1);
    const long p = uniform(q + 1, bound);
    return Rational(BigInt(p), BigInt(q));
  }

  PositiveSet positive_set(std::size_t max_size, long bound) {
    std::vector<Rational> values;
    const long size = uniform(0, static_cast<long>(max_size));
    for (long i = 0; i < size; ++i) values.push_back(positive_rational(bound));
    return PositiveSet(std::move(values));
  }

  template <class Range>
  auto pick(const Range& r) {
    auto it = std::begin(r);
    std::advance(it, uniform(0, static_cast<long>(std::size(r)) - 1));
    return *it;
  }

  std::string word(std::size_t length, std::string_view alphabet) {
    std::string w;
    for (std::size_t i = 0; i < length; ++i) w += alphabet[static_cast<std::size_t>(uniform(0, static_cast<long>(alphabet.size()) - 1))];
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace dyckdiv::testing
