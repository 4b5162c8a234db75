#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyckdiv/rational.hpp"

namespace dyckdiv::cli {

struct CheckFailure {
  std::uint64_t n = 0;
  Rational lambda;
  std::string identity;
};

struct CheckSummary {
  std::uint64_t checks = 0;
  std::optional<CheckFailure> failure;  // the one with the smallest n
};

// Cross-checks every identity relating the class words, their factorizations,
// the component counts and the dense-divisibility deciders, for each n in
// [1, n_max] and each λ in `lambdas` plus every singular value of divisors(n).
// `threads` = 0 picks the hardware concurrency.
CheckSummary run_check_battery(std::uint64_t n_max, const std::vector<Rational>& lambdas, unsigned threads = 0);

}  // namespace dyckdiv::cli
