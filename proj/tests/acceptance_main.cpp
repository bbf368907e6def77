// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "primed/baselines.hpp"
#include "primed/config.hpp"
#include "primed/env.hpp"
#include "primed/harness.hpp"
#include "primed/phases.hpp"
#include "primed/presets.hpp"
#include "primed/wi_ucb.hpp"
#include "primed/wiwo_ucb.hpp"

using namespace primed;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& label, const std::string& details) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << label;
  if (!details.empty()) std::cout << " (" << details << ")";
  std::cout << '\n';
  std::cout.flush();
  if (!pass) ++failures;
}

double final_regret(const RegretCurve& curve) { return curve.mean_cum_regret.back(); }

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& values) {
  MeanSe out;
  const double n = static_cast<double>(values.size());
  for (double v : values) out.mean += v;
  out.mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  if (values.size() > 1) out.se = std::sqrt(ss / (n - 1) / n);
  return out;
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(v.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<double>(i + 1);
    return rank;
  };
  const auto rx = ranks(xs);
  const auto ry = ranks(ys);
  const double n = static_cast<double>(xs.size());
  double d2 = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

const RegretCurve& curve_of(const std::vector<std::pair<std::string, RegretCurve>>& curves,
                            const std::string& name) {
  for (const auto& [policy, curve] : curves)
    if (policy == name) return curve;
  throw std::logic_error("missing curve for " + name);
}

// ---------------------------------------------------------------------------

void criterion_1_wear_in_comparative() {
  auto curves = run_policy_suite(wear_in_config(/*master_seed=*/1, /*runs=*/30, /*threads=*/8));
  const double wi_final = final_regret(curve_of(curves, "wi-ucb"));
  double min_baseline = 1e300;
  double max_baseline_ratio = 0.0;
  double min_baseline_ratio = 1e300;
  for (const char* name : {"ucb1", "moss", "se"}) {
    const RegretCurve& curve = curve_of(curves, name);
    min_baseline = std::min(min_baseline, final_regret(curve));
    auto ratio = sublinearity_ratio(curve);
    if (ratio) {
      max_baseline_ratio = std::max(max_baseline_ratio, *ratio);
      min_baseline_ratio = std::min(min_baseline_ratio, *ratio);
    } else {
      min_baseline_ratio = 0.0;
    }
  }
  auto wi_ratio = sublinearity_ratio(curve_of(curves, "wi-ucb"));
  const bool pass = wi_final < 0.6 * min_baseline && min_baseline_ratio >= 1.85 && wi_ratio &&
                    *wi_ratio <= 1.8;
  report(1, pass, "wear-in comparative regret",
         "wi-ucb final=" + fmt(wi_final) + " vs 0.6*min(baselines)=" + fmt(0.6 * min_baseline) +
             ", baseline ratios>=" + fmt(min_baseline_ratio) +
             ", wi-ucb ratio=" + (wi_ratio ? fmt(*wi_ratio) : std::string("undef")));
}

void criterion_2_wear_in_out_comparative() {
  BanditInstance instance;
  for (double p : {0.9, 0.7, 0.5, 0.3, 0.1}) instance.arms.push_back(ArmSpec::bernoulli(p));
  instance.horizon_T = 20000;
  instance.priming.window_N = 10;
  instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 3));
  instance.priming.wear_out.push_back(DiscreteDist::uniform_range(6, 10));

  ExperimentConfig config;
  config.instance = instance;
  config.policies = {{"wiwo-ucb", std::nullopt},
                     {"wi-ucb", std::nullopt},
                     {"ucb1", std::nullopt},
                     {"moss", std::nullopt},
                     {"se", std::nullopt}};
  config.benchmark = BenchmarkKind::kTopTwoRandom;
  config.runs = 30;
  config.master_seed = 1;
  config.threads = 8;

  auto curves = run_policy_suite(config);
  const double wiwo_final = final_regret(curve_of(curves, "wiwo-ucb"));
  bool beats_all = true;
  double tightest = 1e300;
  for (const char* name : {"wi-ucb", "ucb1", "moss", "se"}) {
    const double other = final_regret(curve_of(curves, name));
    tightest = std::min(tightest, other);
    if (!(wiwo_final < 0.6 * other)) beats_all = false;
  }
  auto wiwo_ratio = sublinearity_ratio(curve_of(curves, "wiwo-ucb"));
  auto wi_ratio = sublinearity_ratio(curve_of(curves, "wi-ucb"));
  const bool pass = beats_all && wiwo_ratio && *wiwo_ratio <= 1.85 && wi_ratio &&
                    *wi_ratio >= 1.85;
  report(2, pass, "wear-in/wear-out comparative regret",
         "wiwo final=" + fmt(wiwo_final) + " vs 0.6*min(others)=" + fmt(0.6 * tightest) +
             ", wiwo ratio=" + (wiwo_ratio ? fmt(*wiwo_ratio) : std::string("undef")) +
             ", wi ratio=" + (wi_ratio ? fmt(*wi_ratio) : std::string("undef")));
}

void criterion_3_switching_monotonicity() {
  const int multiplicities[] = {1, 3, 7};
  std::vector<MeanSe> stats;
  for (int mult : multiplicities) {
    BanditInstance instance = make_switching_instance(/*master_seed=*/1, mult);
    ExperimentConfig config;
    config.instance = instance;
    config.policies = {{"ucb1", std::nullopt}};
    config.benchmark = BenchmarkKind::kBestArm;
    config.runs = 30;
    config.master_seed = 1;
    config.threads = 8;
    auto traces = run_episodes(instance, make_policy_factory(config, config.policies[0]), 30, 1,
                               8);
    std::vector<double> per_run;
    per_run.reserve(traces.size());
    for (const auto& trace : traces) per_run.push_back(mean_same_arm_count(trace.actions, 15));
    stats.push_back(mean_se(per_run));
  }
  bool pass = true;
  std::string details;
  for (int i = 0; i + 1 < 3; ++i) {
    const double gap = stats[static_cast<std::size_t>(i)].mean -
                       stats[static_cast<std::size_t>(i + 1)].mean;
    const double pooled = std::sqrt(stats[static_cast<std::size_t>(i)].se *
                                        stats[static_cast<std::size_t>(i)].se +
                                    stats[static_cast<std::size_t>(i + 1)].se *
                                        stats[static_cast<std::size_t>(i + 1)].se);
    if (!(gap > 2.0 * pooled)) pass = false;
  }
  details = "means 1/3/7 = " + fmt(stats[0].mean) + "/" + fmt(stats[1].mean) + "/" +
            fmt(stats[2].mean);
  report(3, pass, "same-arm count decreases with optimal-arm multiplicity", details);
}

void criterion_4_wear_in_sweep() {
  const std::vector<double> targets = {2.0, 6.0, 10.0, 14.0};
  std::vector<double> finals;
  std::vector<double> errors;
  for (double target : targets) {
    BanditInstance instance = make_ed_sweep_instance(/*master_seed=*/1, target);
    ExperimentConfig config;
    config.instance = instance;
    config.policies = {{"wi-ucb", std::nullopt}};
    config.benchmark = BenchmarkKind::kBestArm;
    config.runs = 30;
    config.master_seed = 1;
    config.threads = 8;
    auto curves = run_policy_suite(config);
    finals.push_back(final_regret(curves[0].second));
    errors.push_back(curves[0].second.stderr_cum.back());
  }
  const double gap = finals.back() - finals.front();
  const double pooled = std::sqrt(errors.back() * errors.back() + errors.front() * errors.front());
  const double rho = spearman(targets, finals);
  const bool pass = gap > 2.0 * pooled && rho >= 0.8;
  report(4, pass, "regret grows with the wear-in level",
         "finals=" + fmt(finals[0]) + "/" + fmt(finals[1]) + "/" + fmt(finals[2]) + "/" +
             fmt(finals[3]) + ", spearman=" + fmt(rho));
}

void criterion_5_phase_length_conformance() {
  bool pass = phase_length_wi(1, 1.0, std::exp(3.0), 0.0) == 26 &&
              phase_length_wiwo(1, 1.0, std::exp(3.0), 10, 1.0) == 52;
  for (int m = 1; m <= 12 && pass; ++m) {
    for (int log_t = 1; log_t <= 10 && pass; ++log_t) {
      const double horizon = std::exp(static_cast<double>(log_t));
      for (double expected_d : {0.0, 1.0, 5.0, 20.0}) {
        const double delta = std::pow(2.0, 1 - m);
        if (!phase_length_bound_check(phase_length_wi(m, delta, horizon, expected_d), m, delta,
                                      horizon, expected_d, std::nullopt)) {
          pass = false;
          break;
        }
        for (int window : {1, 5, 10, 50}) {
          if (!phase_length_bound_check(
                  phase_length_wiwo(m, delta, horizon, window, expected_d), m, delta, horizon,
                  expected_d, window)) {
            pass = false;
            break;
          }
        }
      }
    }
  }
  report(5, pass, "phase lengths meet the closed-form bound and anchor values", "");
}

void criterion_6_concentration() {
  BanditInstance wear_in_instance;
  for (double p : {0.9, 0.7, 0.5, 0.3, 0.1})
    wear_in_instance.arms.push_back(ArmSpec::bernoulli(p));
  wear_in_instance.horizon_T = 2000;
  wear_in_instance.priming.window_N = 10;
  wear_in_instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 3));

  BanditInstance joint_instance = wear_in_instance;
  joint_instance.priming.wear_out.push_back(DiscreteDist::uniform_range(6, 10));

  const int runs = 500;
  long wi_events = 0, wi_hits = 0;
  long joint_events = 0, joint_hits = 0;

  const double expected_d = wear_in_instance.priming.expected_wear_in();
  const auto arm_means = wear_in_instance.means();
  for (int r = 0; r < runs; ++r) {
    WiUcbPolicy policy(5, wear_in_instance.horizon_T, expected_d);
    run_episode(wear_in_instance, policy, derive_seed(606, static_cast<std::uint64_t>(r)));
    for (const auto& record : policy.phase_log()) {
      for (std::size_t i = 0; i < record.members.size(); ++i) {
        ++wi_events;
        const double mu = arm_means[static_cast<std::size_t>(record.members[i])];
        if (std::abs(record.estimates[i] - mu) <= record.delta_tilde / 2.0) ++wi_hits;
      }
    }
  }

  const auto pairs = enumerate_compound_arms(5);
  for (int r = 0; r < runs; ++r) {
    WiWoUcbPolicy policy(5, joint_instance.horizon_T, 10, expected_d,
                         derive_seed(707, static_cast<std::uint64_t>(r), StreamRole::kPolicy));
    run_episode(joint_instance, policy, derive_seed(707, static_cast<std::uint64_t>(r)));
    for (const auto& record : policy.phase_log()) {
      for (std::size_t i = 0; i < record.members.size(); ++i) {
        ++joint_events;
        const auto& pair = pairs[static_cast<std::size_t>(record.members[i])];
        const double mu = (arm_means[static_cast<std::size_t>(pair.lo)] +
                           arm_means[static_cast<std::size_t>(pair.hi)]) /
                          2.0;
        if (std::abs(record.estimates[i] - mu) <= record.delta_tilde / 2.0) ++joint_hits;
      }
    }
  }

  const double wi_rate =
      wi_events > 0 ? static_cast<double>(wi_hits) / static_cast<double>(wi_events) : 0.0;
  const double joint_rate =
      joint_events > 0 ? static_cast<double>(joint_hits) / static_cast<double>(joint_events) : 0.0;
  const bool pass = wi_events > 0 && joint_events > 0 && wi_rate >= 0.99 && joint_rate >= 0.99;
  report(6, pass, "phase-end estimates concentrate within half the width",
         "wi " + fmt(100.0 * wi_rate) + "% of " + std::to_string(wi_events) + ", wiwo " +
             fmt(100.0 * joint_rate) + "% of " + std::to_string(joint_events) + " events");
}

void criterion_7_benchmark_oracle_agreement() {
  BanditInstance instance;
  for (double p : {0.8, 0.5, 0.3}) instance.arms.push_back(ArmSpec::bernoulli(p));
  instance.horizon_T = 200;
  instance.priming.window_N = 8;
  instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 3));
  instance.priming.wear_out.push_back(DiscreteDist::uniform_range(5, 8));

  const long runs = 2000;
  const long checkpoints[] = {1, 8, 100, 200};
  bool pass = true;
  std::string details;
  for (BenchmarkKind kind : {BenchmarkKind::kBestArm, BenchmarkKind::kTopTwoRandom,
                             BenchmarkKind::kTopTwoAlternating}) {
    auto analytic = benchmark_expected_cumulative(instance, kind, instance.horizon_T);
    auto factory = [&](std::uint64_t seed) {
      return std::make_unique<BenchmarkPolicy>(instance, kind, seed);
    };
    auto traces = run_episodes(instance, factory, runs, 1, 8);
    for (long t : checkpoints) {
      std::vector<double> values;
      values.reserve(static_cast<std::size_t>(runs));
      for (const auto& trace : traces)
        values.push_back(trace.cum_rewards[static_cast<std::size_t>(t - 1)]);
      MeanSe stats = mean_se(values);
      const double diff = std::abs(analytic[static_cast<std::size_t>(t - 1)] - stats.mean);
      if (!(diff <= 3.0 * stats.se + 1e-9)) {
        pass = false;
        details += std::string(benchmark_name(kind)) + "@t=" + std::to_string(t) + " diff=" +
                   fmt(diff) + " se=" + fmt(stats.se) + "; ";
      }
    }
  }
  report(7, pass, "analytic benchmark matches simulation at all checkpoints", details);
}

void criterion_8_environment_oracle() {
  BanditInstance instance;
  for (double p : {0.3, 0.5, 0.7, 0.2, 0.9}) instance.arms.push_back(ArmSpec::bernoulli(p));
  instance.horizon_T = 100000;
  instance.priming.window_N = 7;
  instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 3));
  instance.priming.wear_out.push_back(DiscreteDist::uniform_range(4, 7));

  Env env(instance, 2024, /*trace_diagnostics=*/true);
  Rand actions(99);
  std::vector<int> history;
  bool pass = true;
  for (int t = 0; t < 100000 && pass; ++t) {
    const int arm = static_cast<int>(actions.next_u64() % 5);
    int expected = 1;
    const int start = std::max(0, static_cast<int>(history.size()) - 6);
    for (int k = start; k < static_cast<int>(history.size()); ++k)
      if (history[static_cast<std::size_t>(k)] == arm) ++expected;
    Observation obs = env.step(arm);
    const double gated =
        (obs.wear_out_draw >= obs.window_count && obs.window_count >= obs.wear_in_draw)
            ? obs.raw_r
            : 0.0;
    if (obs.window_count != expected || obs.accrued_x != gated) pass = false;
    history.push_back(arm);
  }
  report(8, pass, "ring window equals brute-force recount and censoring identity holds", "");
}

void criterion_9_thread_determinism() {
  const fs::path base = fs::temp_directory_path() / "primed-acceptance-determinism";
  fs::remove_all(base);
  std::vector<std::string> digests;
  for (int threads : {1, 4, 16}) {
    const fs::path dir = base / ("t" + std::to_string(threads));
    PresetOverrides overrides;
    overrides.runs = 30;
    overrides.threads = threads;
    auto files = run_preset("wear-in", /*master_seed=*/1, overrides, dir);
    std::string all;
    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      all.append((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      all.push_back('\0');
    }
    digests.push_back(std::move(all));
  }
  const bool pass = digests[0] == digests[1] && digests[1] == digests[2];
  fs::remove_all(base);
  report(9, pass, "preset outputs are byte-identical across thread counts", "");
}

}  // namespace

int main() {
  criterion_1_wear_in_comparative();
  criterion_2_wear_in_out_comparative();
  criterion_3_switching_monotonicity();
  criterion_4_wear_in_sweep();
  criterion_5_phase_length_conformance();
  criterion_6_concentration();
  criterion_7_benchmark_oracle_agreement();
  criterion_8_environment_oracle();
  criterion_9_thread_determinism();
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
