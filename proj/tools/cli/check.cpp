#include "cli/check.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "dyckdiv/divisors.hpp"
#include "dyckdiv/interval_topology.hpp"
#include "dyckdiv/lambda_class.hpp"

namespace dyckdiv::cli {

namespace {

// Runs the battery for one (n, λ); returns the name of the first violated
// identity, if any.
std::optional<std::string> check_one(std::uint64_t n, const PositiveSet& ds, const Rational& lambda,
                                     std::uint64_t& checks) {
  const auto expect = [&](bool ok, const char* identity) -> std::optional<std::string> {
    ++checks;
    if (ok) return std::nullopt;
    return std::string(identity);
  };
#define DYCKDIV_EXPECT(cond, name) \
  if (auto f = expect((cond), name)) return f

  const BalancedWord word = lambda_class(ds, lambda);
  const TriWord hooley = hooley_class(ds, lambda);
  DYCKDIV_EXPECT(is_dyck(word), "class word is Dyck");
  DYCKDIV_EXPECT(is_hooley_dyck(hooley), "Hooley word is Hooley-Dyck");
  DYCKDIV_EXPECT(gamma(hooley) == word, "gamma(Hooley word) = class word");

  const std::size_t om = omega(word);
  const std::size_t count = components(ds, lambda).count;
  DYCKDIV_EXPECT(count == om, "components = omega");
  DYCKDIV_EXPECT(components_graph_oracle(ds, lambda) == count, "components = overlap-graph oracle");
  DYCKDIV_EXPECT(theta(hooley) == om, "theta = omega o gamma");

  const BalancedWord limit = alpha(hooley);
  DYCKDIV_EXPECT(omega(limit) == om, "theta = omega o alpha");
  const auto next = next_singular_above(ds, lambda);
  const Rational nearby = (lambda + (next ? *next : lambda + Rational(1))) / Rational(2);
  DYCKDIV_EXPECT(lambda_class(ds, nearby) == limit, "alpha(Hooley word) = class word just above lambda");

  const bool dense = is_densely_divisible(n, lambda);
  DYCKDIV_EXPECT(is_densely_divisible_sweep(n, lambda) == dense, "ratio decider = sweep decider");
  DYCKDIV_EXPECT((om == 1) == dense, "ratio decider = word decider");
  DYCKDIV_EXPECT(height(word) == delta_bruteforce(n, lambda), "delta = brute-force delta");
#undef DYCKDIV_EXPECT
  return std::nullopt;
}

}  // namespace

CheckSummary run_check_battery(std::uint64_t n_max, const std::vector<Rational>& lambdas, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n_max, 1)));

  std::atomic<std::uint64_t> next_n{1};
  std::atomic<std::uint64_t> total{0};
  std::mutex failure_mutex;
  CheckSummary summary;

  const auto worker = [&] {
    std::uint64_t local = 0;
    for (std::uint64_t n = next_n++; n <= n_max; n = next_n++) {
      const auto ds = divisors(n).divisors;
      std::vector<Rational> probes = lambdas;
      const auto singular = singular_values(ds);
      probes.insert(probes.end(), singular.begin(), singular.end());
      for (const auto& lambda : probes) {
        if (auto identity = check_one(n, ds, lambda, local)) {
          std::lock_guard lock(failure_mutex);
          if (!summary.failure || n < summary.failure->n) summary.failure = CheckFailure{n, lambda, *identity};
          break;
        }
      }
    }
    total += local;
  };

  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  summary.checks = total;
  return summary;
}

}  // namespace dyckdiv::cli
