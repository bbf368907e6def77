#include "primed/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primed {

const char* benchmark_name(BenchmarkKind kind) {
  switch (kind) {
    case BenchmarkKind::kBestArm: return "best-arm";
    case BenchmarkKind::kTopTwoRandom: return "top-two-random";
    case BenchmarkKind::kTopTwoAlternating: return "top-two-alternating";
  }
  return "?";
}

BenchmarkPolicy::BenchmarkPolicy(const BanditInstance& instance, BenchmarkKind kind,
                                 std::uint64_t seed)
    : kind_(kind), rng_(seed) {
  if (kind != BenchmarkKind::kBestArm && instance.num_arms() < 2)
    throw std::invalid_argument("top-two benchmark requires K >= 2");
  if (instance.num_arms() >= 2) {
    auto [first, second] = instance.top_two();
    best_ = first;
    second_ = second;
  } else {
    best_ = instance.best_arm();
  }
}

int BenchmarkPolicy::select(long t) {
  switch (kind_) {
    case BenchmarkKind::kBestArm:
      return best_;
    case BenchmarkKind::kTopTwoRandom:
      return rng_.next_coin() ? best_ : second_;
    case BenchmarkKind::kTopTwoAlternating:
      return (t % 2 == 0) ? best_ : second_;
  }
  return best_;
}

namespace {

// P(accrue | window count c) for one arm.
double survival_at_count(const PrimingSpec& priming, int arm, int count) {
  double p = priming.wear_in_for(arm).cdf(count);
  if (const DiscreteDist* out = priming.wear_out_for(arm)) p *= out->sf(count);
  return p;
}

// pmf of Binomial(n, 1/2) via the stable multiplicative recurrence.
std::vector<double> half_binomial_pmf(int n) {
  std::vector<double> pmf(static_cast<std::size_t>(n) + 1);
  double p = std::pow(0.5, n);
  for (int k = 0; k <= n; ++k) {
    pmf[static_cast<std::size_t>(k)] = p;
    if (k < n) p *= static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return pmf;
}

}  // namespace

double benchmark_expected_reward(const BanditInstance& instance, BenchmarkKind kind, long t) {
  const auto& priming = instance.priming;
  const int n = priming.window_N;
  switch (kind) {
    case BenchmarkKind::kBestArm: {
      const int best = instance.best_arm();
      const int count = static_cast<int>(std::min<long>(t + 1, n));
      return instance.best_mean() * survival_at_count(priming, best, count);
    }
    case BenchmarkKind::kTopTwoRandom: {
      auto [a1, a2] = instance.top_two();
      const int w = static_cast<int>(std::min<long>(t, n - 1));
      const auto pmf = half_binomial_pmf(w);
      // Count of the chosen arm in the window is 1 + Binomial(w, 1/2),
      // independent of the current coin.
      double total = 0.0;
      for (int k = 0; k <= w; ++k) {
        const int count = 1 + k;
        double mix = 0.5 * (instance.arms[static_cast<std::size_t>(a1)].mean() *
                                survival_at_count(priming, a1, count) +
                            instance.arms[static_cast<std::size_t>(a2)].mean() *
                                survival_at_count(priming, a2, count));
        total += pmf[static_cast<std::size_t>(k)] * mix;
      }
      return total;
    }
    case BenchmarkKind::kTopTwoAlternating: {
      auto [a1, a2] = instance.top_two();
      const int w = static_cast<int>(std::min<long>(t, n - 1));
      const int count = 1 + w / 2;
      const int arm = (t % 2 == 0) ? a1 : a2;
      return instance.arms[static_cast<std::size_t>(arm)].mean() *
             survival_at_count(priming, arm, count);
    }
  }
  return 0.0;
}

std::vector<double> benchmark_expected_cumulative(const BanditInstance& instance,
                                                  BenchmarkKind kind, long t_rounds) {
  std::vector<double> cum(static_cast<std::size_t>(t_rounds));
  double acc = 0.0;
  for (long t = 0; t < t_rounds; ++t) {
    acc += benchmark_expected_reward(instance, kind, t);
    cum[static_cast<std::size_t>(t)] = acc;
  }
  return cum;
}

}  // namespace primed
