#pragma once

#include <cstddef>
#include <cstdint>

#include "dyckdiv/positive_set.hpp"
#include "dyckdiv/rational.hpp"
#include "dyckdiv/words.hpp"

namespace dyckdiv {

struct DivisorProfile {
  std::uint64_t n = 1;
  PositiveSet divisors;  // ascending, as integer Rationals
};

// All divisors of n by trial division. Throws std::invalid_argument if n < 1.
DivisorProfile divisors(std::uint64_t n);

// The λ-class of n: lambda_class(divisors(n), λ).
BalancedWord class_word_of_int(std::uint64_t n, const Rational& lambda);

/// Generalized Hooley Δ_λ(n), computed as the height of the Dyck path of the
/// λ-class of n.
std::size_t delta(std::uint64_t n, const Rational& lambda);

/// Δ_λ(n) straight from its definition: the largest number of divisors in a
/// half-open window (R/λ, R].
///
/// Only R ranging over the divisors is tried. The window count as a function
/// of R is right-continuous, jumps up only when R crosses a divisor and jumps
/// down only when R crosses λ·d, so its maximum is attained at a divisor.
std::size_t delta_bruteforce(std::uint64_t n, const Rational& lambda);

// Ratio criterion: consecutive divisors d < d' always satisfy d' ≤ λ·d.
bool is_densely_divisible(std::uint64_t n, const Rational& lambda);

// Checks "some divisor lies in [R/λ, R]" for each R in a finite critical set:
// every divisor d, every λ·d, and the midpoints between consecutive critical
// values, all clipped to [1, n].
bool is_densely_divisible_sweep(std::uint64_t n, const Rational& lambda);

// Ω of the λ-class of n equals 1.
bool is_densely_divisible_via_word(std::uint64_t n, const Rational& lambda);

}  // namespace dyckdiv
