#include "dyckdiv/divisors.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dyckdiv/lambda_class.hpp"

namespace dyckdiv {

namespace {

void require_valid(std::uint64_t n, const Rational& lambda) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (lambda <= Rational(1))
    throw std::invalid_argument("lambda must exceed 1, got " + lambda.to_string());
}

std::vector<std::uint64_t> integer_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// True iff some element of `sorted` lies in the closed interval [lo, hi].
bool hits(std::span<const Rational> sorted, const Rational& lo, const Rational& hi) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), lo);
  return it != sorted.end() && *it <= hi;
}

}  // namespace

DivisorProfile divisors(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto ds = integer_divisors(n);
  return {n, PositiveSet(std::vector<Rational>(ds.begin(), ds.end()))};
}

BalancedWord class_word_of_int(std::uint64_t n, const Rational& lambda) {
  require_valid(n, lambda);
  return lambda_class(divisors(n).divisors, lambda);
}

std::size_t delta(std::uint64_t n, const Rational& lambda) {
  return height(class_word_of_int(n, lambda));
}

std::size_t delta_bruteforce(std::uint64_t n, const Rational& lambda) {
  require_valid(n, lambda);
  const auto ds = divisors(n).divisors;
  std::size_t best = 0;
  for (const auto& r : ds) {
    const Rational low = r / lambda;
    const auto count = std::count_if(ds.begin(), ds.end(), [&](const Rational& d) { return low < d && d <= r; });
    best = std::max(best, static_cast<std::size_t>(count));
  }
  return best;
}

bool is_densely_divisible(std::uint64_t n, const Rational& lambda) {
  require_valid(n, lambda);
  const auto ds = divisors(n).divisors;
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    if (lambda * ds[i] < ds[i + 1]) return false;
  return true;
}

bool is_densely_divisible_sweep(std::uint64_t n, const Rational& lambda) {
  require_valid(n, lambda);
  const auto ds = divisors(n).divisors;
  const Rational one(1), top(n);

  std::vector<Rational> critical{one, top};
  for (const auto& d : ds) {
    critical.push_back(d);
    critical.push_back(lambda * d);
  }
  PositiveSet points(std::move(critical));

  std::vector<Rational> probes(points.begin(), points.end());
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    probes.push_back((points[i] + points[i + 1]) / Rational(2));

  for (const auto& r : probes) {
    if (r < one || top < r) continue;
    if (!hits(ds.elements(), r / lambda, r)) return false;
  }
  return true;
}

bool is_densely_divisible_via_word(std::uint64_t n, const Rational& lambda) {
  return omega(class_word_of_int(n, lambda)) == 1;
}

}  // namespace dyckdiv
