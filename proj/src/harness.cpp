#include "primed/harness.hpp"

#include <atomic>
#include <mutex>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

namespace primed {

RunTrace run_episode(const BanditInstance& instance, Policy& policy, std::uint64_t seed,
                     bool diagnostics) {
  Env env(instance, derive_seed(seed, 0, StreamRole::kEnv), diagnostics);
  RunTrace trace;
  trace.seed = seed;
  trace.policy_name = std::string(policy.name());
  const long horizon = instance.horizon_T;
  trace.actions.reserve(static_cast<std::size_t>(horizon));
  trace.rewards.reserve(static_cast<std::size_t>(horizon));
  trace.cum_rewards.reserve(static_cast<std::size_t>(horizon));
  double cum = 0.0;
  for (long t = 0; t < horizon; ++t) {
    const int arm = policy.select(t);
    Observation obs = env.step(arm);
    policy.observe(PolicyObservation{obs.t, obs.arm, obs.accrued_x});
    trace.actions.push_back(arm);
    trace.rewards.push_back(obs.accrued_x);
    cum += obs.accrued_x;
    trace.cum_rewards.push_back(cum);
    if (diagnostics) trace.diagnostics.push_back(obs);
  }
  return trace;
}

RunTrace run_episode(const BanditInstance& instance, const PolicyFactory& make_policy,
                     std::uint64_t seed, bool diagnostics) {
  auto policy = make_policy(derive_seed(seed, 0, StreamRole::kPolicy));
  return run_episode(instance, *policy, seed, diagnostics);
}

namespace {

// Runs fn(r) for r in [0, count) on up to `threads` workers. Work is claimed
// through an atomic counter; callers must make fn(r) write only to slot r.
// The first exception thrown by any worker is rethrown after the join.
void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
  const int workers = static_cast<int>(std::min<long>(std::max(threads, 1), count));
  if (workers <= 1) {
    for (long r = 0; r < count; ++r) fn(r);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const long r = next.fetch_add(1);
        if (r >= count || failed.load()) break;
        try {
          fn(r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct CurveAccumulator {
  std::vector<double> sum;
  std::vector<double> sum_sq;

  explicit CurveAccumulator(std::size_t size) : sum(size, 0.0), sum_sq(size, 0.0) {}

  void add(const std::vector<double>& curve) {
    for (std::size_t i = 0; i < curve.size(); ++i) {
      sum[i] += curve[i];
      sum_sq[i] += curve[i] * curve[i];
    }
  }
};

// Mean cumulative-reward curves over `runs` episodes, accumulated in
// replication order regardless of scheduling (block-parallel, ordered reduce).
CurveAccumulator accumulate_episodes(const BanditInstance& instance,
                                     const std::function<RunTrace(std::uint64_t)>& episode,
                                     long runs,
                                     const std::function<std::uint64_t(long)>& seed_for,
                                     int threads) {
  const std::size_t horizon = static_cast<std::size_t>(instance.horizon_T);
  CurveAccumulator acc(horizon);
  const long block = 64;
  std::vector<std::vector<double>> curves(static_cast<std::size_t>(std::min(block, runs)));
  for (long base = 0; base < runs; base += block) {
    const long batch = std::min(block, runs - base);
    parallel_for(batch, threads, [&](long i) {
      curves[static_cast<std::size_t>(i)] = episode(seed_for(base + i)).cum_rewards;
    });
    for (long i = 0; i < batch; ++i) acc.add(curves[static_cast<std::size_t>(i)]);
  }
  return acc;
}

}  // namespace

std::vector<RunTrace> run_episodes(const BanditInstance& instance,
                                   const PolicyFactory& make_policy, long runs,
                                   std::uint64_t master_seed, int threads, bool diagnostics) {
  std::vector<RunTrace> traces(static_cast<std::size_t>(runs));
  parallel_for(runs, threads, [&](long r) {
    const std::uint64_t seed = derive_seed(master_seed, static_cast<std::uint64_t>(r));
    traces[static_cast<std::size_t>(r)] = run_episode(instance, make_policy, seed, diagnostics);
  });
  return traces;
}

RegretCurve monte_carlo_regret(const BanditInstance& instance, const PolicyFactory& make_policy,
                               BenchmarkKind benchmark, long runs, std::uint64_t master_seed,
                               BenchmarkMode mode, int threads) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  const std::size_t horizon = static_cast<std::size_t>(instance.horizon_T);

  CurveAccumulator policy_acc = accumulate_episodes(
      instance,
      [&](std::uint64_t seed) { return run_episode(instance, make_policy, seed); }, runs,
      [&](long r) { return derive_seed(master_seed, static_cast<std::uint64_t>(r)); }, threads);

  std::vector<double> bench_cum;
  std::vector<double> bench_var(horizon, 0.0);
  if (mode == BenchmarkMode::kAnalytic) {
    bench_cum = benchmark_expected_cumulative(instance, benchmark, instance.horizon_T);
  } else {
    CurveAccumulator bench_acc = accumulate_episodes(
        instance,
        [&](std::uint64_t seed) {
          BenchmarkPolicy policy(instance, benchmark,
                                 derive_seed(seed, 0, StreamRole::kPolicy));
          return run_episode(instance, policy, seed);
        },
        runs,
        [&](long r) {
          return derive_seed(master_seed, static_cast<std::uint64_t>(r),
                             StreamRole::kBenchmarkEpisode);
        },
        threads);
    bench_cum.resize(horizon);
    for (std::size_t i = 0; i < horizon; ++i) {
      const double mean = bench_acc.sum[i] / static_cast<double>(runs);
      bench_cum[i] = mean;
      if (runs > 1)
        bench_var[i] = std::max(0.0, (bench_acc.sum_sq[i] -
                                      static_cast<double>(runs) * mean * mean) /
                                         static_cast<double>(runs - 1));
    }
  }

  RegretCurve curve;
  curve.runs = runs;
  curve.benchmark = benchmark;
  curve.mode = mode;
  curve.mean_cum_regret.resize(horizon);
  curve.stderr_cum.resize(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    const double mean = policy_acc.sum[i] / static_cast<double>(runs);
    double var = 0.0;
    if (runs > 1)
      var = std::max(0.0, (policy_acc.sum_sq[i] - static_cast<double>(runs) * mean * mean) /
                              static_cast<double>(runs - 1));
    curve.mean_cum_regret[i] = bench_cum[i] - mean;
    curve.stderr_cum[i] = std::sqrt((var + bench_var[i]) / static_cast<double>(runs));
  }
  return curve;
}

SwitchHistogram switching_histogram(std::span<const std::vector<int>> traces, int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  SwitchHistogram hist;
  hist.window = window;
  hist.frequency.assign(static_cast<std::size_t>(window) + 1, 0);
  for (const auto& actions : traces) {
    for (std::size_t t = 1; t < actions.size(); ++t) {
      const std::size_t lookback = std::min<std::size_t>(t, static_cast<std::size_t>(window));
      int count = 0;
      for (std::size_t k = t - lookback; k < t; ++k)
        if (actions[k] == actions[t]) ++count;
      ++hist.frequency[static_cast<std::size_t>(count)];
    }
  }
  return hist;
}

double mean_same_arm_count(std::span<const int> actions, int window) {
  if (actions.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t t = 1; t < actions.size(); ++t) {
    const std::size_t lookback = std::min<std::size_t>(t, static_cast<std::size_t>(window));
    for (std::size_t k = t - lookback; k < t; ++k)
      if (actions[k] == actions[t]) total += 1.0;
  }
  return total / static_cast<double>(actions.size() - 1);
}

std::optional<double> sublinearity_ratio(const RegretCurve& curve) {
  const std::size_t t_final = curve.mean_cum_regret.size();
  if (t_final < 2) throw std::invalid_argument("curve too short for a ratio");
  const double at_half = curve.mean_cum_regret[t_final / 2 - 1];
  const double at_final = curve.mean_cum_regret[t_final - 1];
  if (!(at_half > 0.0)) return std::nullopt;
  return at_final / at_half;
}

}  // namespace primed
