#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primed/benchmarks.hpp"
#include "primed/env.hpp"
#include "primed/instance.hpp"
#include "primed/policy.hpp"

namespace primed {

struct RunTrace {
  std::uint64_t seed = 0;
  std::string policy_name;
  std::vector<int> actions;
  std::vector<double> rewards;       // accrued, per round
  std::vector<double> cum_rewards;   // prefix sums
  std::vector<Observation> diagnostics;  // only when requested
};

using PolicyFactory = std::function<std::unique_ptr<Policy>(std::uint64_t policy_seed)>;

// One full episode. Environment and policy streams are derived from the
// episode seed under distinct roles, so policy coin flips never perturb
// environment draws.
RunTrace run_episode(const BanditInstance& instance, const PolicyFactory& make_policy,
                     std::uint64_t seed, bool diagnostics = false);
// Same with a caller-owned policy (for post-run inspection).
RunTrace run_episode(const BanditInstance& instance, Policy& policy, std::uint64_t seed,
                     bool diagnostics = false);

// All replications of one policy, in replication order. Replication r uses
// seed derive_seed(master_seed, r); output is independent of thread count.
std::vector<RunTrace> run_episodes(const BanditInstance& instance,
                                   const PolicyFactory& make_policy, long runs,
                                   std::uint64_t master_seed, int threads = 1,
                                   bool diagnostics = false);

enum class BenchmarkMode { kAnalytic, kSimulated };

struct RegretCurve {
  std::vector<double> mean_cum_regret;  // index t-1 holds regret after t rounds
  std::vector<double> stderr_cum;       // standard error of the mean at t
  long runs = 0;
  BenchmarkKind benchmark = BenchmarkKind::kBestArm;
  BenchmarkMode mode = BenchmarkMode::kAnalytic;
};

// Monte-Carlo pseudo-regret: benchmark expected cumulative reward (analytic,
// or the mean of `runs` independent benchmark episodes) minus the mean policy
// cumulative reward. Replication r uses seed derive_seed(master_seed, r);
// the result is bit-identical for any thread count.
RegretCurve monte_carlo_regret(const BanditInstance& instance, const PolicyFactory& make_policy,
                               BenchmarkKind benchmark, long runs, std::uint64_t master_seed,
                               BenchmarkMode mode = BenchmarkMode::kAnalytic, int threads = 1);

struct SwitchHistogram {
  int window = 0;
  std::vector<std::uint64_t> frequency;  // buckets 0..window
};

// For every round t >= 1 of every trace, counts plays of the current arm among
// the previous min(t, window) actions (excluding the current play) and buckets
// the result.
SwitchHistogram switching_histogram(std::span<const std::vector<int>> traces, int window);

// Mean of the same-arm counts for a single action sequence.
double mean_same_arm_count(std::span<const int> actions, int window);

// regret(T) / regret(T/2); nullopt when regret(T/2) <= 0.
std::optional<double> sublinearity_ratio(const RegretCurve& curve);

}  // namespace primed
