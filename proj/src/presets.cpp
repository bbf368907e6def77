#include "primed/presets.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "primed/csv.hpp"

namespace primed {

namespace {

namespace fs = std::filesystem;

std::vector<double> draw_means(std::uint64_t master_seed, int count) {
  Rand rng(derive_seed(master_seed, 0, StreamRole::kInstanceMeans));
  std::vector<double> means(static_cast<std::size_t>(count));
  for (auto& m : means) m = rng.next_double();
  return means;
}

std::vector<ArmSpec> bernoulli_arms(const std::vector<double>& means) {
  std::vector<ArmSpec> arms;
  arms.reserve(means.size());
  for (double m : means) arms.push_back(ArmSpec::bernoulli(m));
  return arms;
}

CsvTable regret_table(const std::vector<std::pair<std::string, RegretCurve>>& curves) {
  CsvTable table;
  table.header = {"policy", "benchmark", "t", "mean_cum_regret", "stderr", "runs"};
  for (const auto& [policy, curve] : curves) {
    const std::string bench = benchmark_name(curve.benchmark);
    const std::string runs = std::to_string(curve.runs);
    for (std::size_t i = 0; i < curve.mean_cum_regret.size(); ++i) {
      table.rows.push_back({policy, bench, std::to_string(i + 1),
                            format_double(curve.mean_cum_regret[i]),
                            format_double(curve.stderr_cum[i]), runs});
    }
  }
  return table;
}

void write_manifest(const fs::path& out_dir, const std::string& preset,
                    std::uint64_t master_seed, const nlohmann::ordered_json& config_section,
                    const std::vector<fs::path>& files,
                    std::vector<fs::path>& written) {
  nlohmann::ordered_json manifest;
  manifest["preset"] = preset;
  manifest["version"] = kVersion;
  manifest["master_seed"] = master_seed;
  manifest["config"] = config_section;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
  for (const auto& f : files) outputs.push_back(f.filename().string());
  manifest["outputs"] = std::move(outputs);
  const fs::path path = out_dir / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest: " + path.string());
  out << manifest.dump(2) << '\n';
  written.push_back(path);
}

ExperimentConfig base_config(BanditInstance instance, std::vector<PolicySpec> policies,
                             BenchmarkKind benchmark, std::uint64_t master_seed, long runs,
                             int threads) {
  ExperimentConfig config;
  config.instance = std::move(instance);
  config.policies = std::move(policies);
  config.benchmark = benchmark;
  config.benchmark_mode = BenchmarkMode::kAnalytic;
  config.runs = runs;
  config.master_seed = master_seed;
  config.threads = threads;
  return config;
}

}  // namespace

BanditInstance make_wear_in_instance(std::uint64_t master_seed) {
  BanditInstance instance;
  instance.arms = bernoulli_arms(draw_means(master_seed, 20));
  instance.horizon_T = 5000;
  instance.priming.window_N = 10;
  instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 10));
  return instance;
}

BanditInstance make_wear_in_out_instance(std::uint64_t master_seed) {
  BanditInstance instance;
  instance.arms = bernoulli_arms(draw_means(master_seed, 20));
  instance.horizon_T = 5000;
  instance.priming.window_N = 10;
  instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 3));
  instance.priming.wear_out.push_back(DiscreteDist::uniform_range(6, 10));
  return instance;
}

BanditInstance make_switching_instance(std::uint64_t master_seed, int multiplicity) {
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
  std::vector<double> means = draw_means(master_seed, 30);
  std::vector<int> order(means.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return means[static_cast<std::size_t>(a)] > means[static_cast<std::size_t>(b)];
  });
  const double best = means[static_cast<std::size_t>(order[0])];
  for (int i = 0; i < multiplicity && i < static_cast<int>(order.size()); ++i)
    means[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = best;

  BanditInstance instance;
  instance.arms = bernoulli_arms(means);
  instance.horizon_T = 5000;
  instance.priming.window_N = 15;
  instance.priming.wear_in.push_back(DiscreteDist::point(0));
  return instance;
}

BanditInstance make_ed_sweep_instance(std::uint64_t master_seed, double target_mean) {
  BanditInstance instance;
  instance.arms = bernoulli_arms(draw_means(master_seed, 10));
  instance.horizon_T = 10000;
  instance.priming.window_N = 20;
  for (int j = 0; j < 10; ++j) {
    const double sigma = 0.5 * static_cast<double>(j + 1);
    instance.priming.wear_in.push_back(
        DiscreteDist::folded_normal(target_mean, sigma, instance.priming.window_N));
  }
  return instance;
}

std::vector<std::pair<std::string, RegretCurve>> run_policy_suite(
    const ExperimentConfig& config) {
  std::vector<std::pair<std::string, RegretCurve>> curves;
  curves.reserve(config.policies.size());
  for (const auto& spec : config.policies) {
    RegretCurve curve =
        monte_carlo_regret(config.instance, make_policy_factory(config, spec), config.benchmark,
                           config.runs, config.master_seed, config.benchmark_mode,
                           config.threads);
    curves.emplace_back(spec.name, std::move(curve));
  }
  return curves;
}

ExperimentConfig wear_in_config(std::uint64_t master_seed, long runs, int threads) {
  return base_config(make_wear_in_instance(master_seed),
                     {{"wi-ucb", std::nullopt},
                      {"ucb1", std::nullopt},
                      {"moss", std::nullopt},
                      {"se", std::nullopt}},
                     BenchmarkKind::kBestArm, master_seed, runs, threads);
}

ExperimentConfig wear_in_out_config(std::uint64_t master_seed, long runs, int threads) {
  return base_config(make_wear_in_out_instance(master_seed),
                     {{"wiwo-ucb", std::nullopt},
                      {"wi-ucb", std::nullopt},
                      {"ucb1", std::nullopt},
                      {"moss", std::nullopt},
                      {"se", std::nullopt}},
                     BenchmarkKind::kTopTwoRandom, master_seed, runs, threads);
}

namespace {

std::vector<fs::path> run_curve_preset(const std::string& name, ExperimentConfig config,
                                       const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  auto curves = run_policy_suite(config);
  const fs::path regret_path = out_dir / "regret.csv";
  write_csv(regret_path, regret_table(curves));
  written.push_back(regret_path);
  write_manifest(out_dir, name, config.master_seed, config_to_json(config), written, written);
  return written;
}

std::vector<fs::path> run_switching_preset(std::uint64_t master_seed, long runs, int threads,
                                           const fs::path& out_dir) {
  fs::create_directories(out_dir);
  constexpr int kWindow = 15;
  const int multiplicities[] = {1, 3, 7};

  CsvTable table;
  table.header = {"setting", "count", "frequency"};
  nlohmann::ordered_json settings = nlohmann::ordered_json::array();
  for (int mult : multiplicities) {
    BanditInstance instance = make_switching_instance(master_seed, mult);
    ExperimentConfig config = base_config(instance, {{"ucb1", std::nullopt}},
                                          BenchmarkKind::kBestArm, master_seed, runs, threads);
    auto traces = run_episodes(instance, make_policy_factory(config, config.policies[0]), runs,
                               master_seed, threads);
    std::vector<std::vector<int>> actions;
    actions.reserve(traces.size());
    for (auto& trace : traces) actions.push_back(std::move(trace.actions));
    SwitchHistogram hist = switching_histogram(actions, kWindow);
    for (std::size_t c = 0; c < hist.frequency.size(); ++c)
      table.rows.push_back({std::to_string(mult), std::to_string(c),
                            std::to_string(hist.frequency[c])});
    nlohmann::ordered_json setting;
    setting["optimal_arm_multiplicity"] = mult;
    setting["config"] = config_to_json(config);
    settings.push_back(std::move(setting));
  }

  std::vector<fs::path> written;
  const fs::path hist_path = out_dir / "switching_histogram.csv";
  write_csv(hist_path, table);
  written.push_back(hist_path);

  nlohmann::ordered_json config_section;
  config_section["analysis_window"] = kWindow;
  config_section["settings"] = std::move(settings);
  write_manifest(out_dir, "switching", master_seed, config_section, written, written);
  return written;
}

std::vector<fs::path> run_ed_sweep_preset(std::uint64_t master_seed, long runs, int threads,
                                          const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const double targets[] = {2.0, 6.0, 10.0, 14.0};
  std::vector<fs::path> written;
  nlohmann::ordered_json settings = nlohmann::ordered_json::array();
  for (double target : targets) {
    BanditInstance instance = make_ed_sweep_instance(master_seed, target);
    ExperimentConfig config = base_config(instance, {{"wi-ucb", std::nullopt}},
                                          BenchmarkKind::kBestArm, master_seed, runs, threads);
    auto curves = run_policy_suite(config);
    const std::string label = std::to_string(static_cast<int>(target));
    const fs::path path = out_dir / ("regret_ed" + label + ".csv");
    write_csv(path, regret_table(curves));
    written.push_back(path);
    nlohmann::ordered_json setting;
    setting["wear_in_target_mean"] = target;
    setting["wear_in_expected_value"] = instance.priming.expected_wear_in();
    setting["config"] = config_to_json(config);
    settings.push_back(std::move(setting));
  }
  nlohmann::ordered_json config_section;
  config_section["settings"] = std::move(settings);
  write_manifest(out_dir, "ed-sweep", master_seed, config_section, written, written);
  return written;
}

}  // namespace

std::vector<fs::path> run_preset(const std::string& name, std::uint64_t master_seed,
                                 const PresetOverrides& overrides, const fs::path& out_dir) {
  const long runs = overrides.runs.value_or(30);
  const int threads = overrides.threads.value_or(1);
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");

  if (name == "wear-in")
    return run_curve_preset(name, wear_in_config(master_seed, runs, threads), out_dir);
  if (name == "wear-in-out")
    return run_curve_preset(name, wear_in_out_config(master_seed, runs, threads), out_dir);
  if (name == "switching") return run_switching_preset(master_seed, runs, threads, out_dir);
  if (name == "ed-sweep") return run_ed_sweep_preset(master_seed, runs, threads, out_dir);
  throw ConfigError("unknown preset '" + name + "'");
}

std::vector<fs::path> run_experiment(const ExperimentConfig& config, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  auto curves = run_policy_suite(config);
  const fs::path regret_path = out_dir / "regret.csv";
  write_csv(regret_path, regret_table(curves));
  written.push_back(regret_path);

  if (config.diagnostics) {
    for (const auto& spec : config.policies) {
      RunTrace trace = run_episode(config.instance, make_policy_factory(config, spec),
                                   derive_seed(config.master_seed, 0), /*diagnostics=*/true);
      CsvTable table;
      table.header = {"t", "arm", "raw_r", "d_sample", "z_sample", "window_count", "accrued_x"};
      for (const auto& obs : trace.diagnostics) {
        table.rows.push_back({std::to_string(obs.t), std::to_string(obs.arm),
                              format_double(obs.raw_r), std::to_string(obs.wear_in_draw),
                              std::to_string(obs.wear_out_draw),
                              std::to_string(obs.window_count), format_double(obs.accrued_x)});
      }
      const fs::path diag_path = out_dir / ("diagnostics_" + spec.name + ".csv");
      write_csv(diag_path, table);
      written.push_back(diag_path);
    }
  }

  write_manifest(out_dir, "custom", config.master_seed, config_to_json(config), written, written);
  return written;
}

}  // namespace primed
