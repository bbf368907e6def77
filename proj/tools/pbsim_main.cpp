#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "primed/config.hpp"
#include "primed/presets.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitContractViolation = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo simulator for stochastic bandits whose rewards are censored "
               "by recency-window wear-in/wear-out effects"};
  app.set_version_flag("--version", primed::kVersion);

  std::string config_path;
  std::string preset_name;
  std::optional<std::uint64_t> seed;
  std::optional<long> runs;
  std::optional<int> threads;
  std::optional<std::string> out_dir;
  bool diagnostics = false;

  auto* config_opt = app.add_option("--config", config_path, "JSON experiment config");
  auto* preset_opt =
      app.add_option("--preset", preset_name,
                     "Canned experiment: wear-in, wear-in-out, switching, ed-sweep");
  config_opt->excludes(preset_opt);
  app.add_option("--seed", seed, "Master seed (overrides the config)");
  app.add_option("--runs", runs, "Monte-Carlo replications (overrides the config)");
  app.add_option("--threads", threads, "Worker threads; never affects output bytes");
  app.add_option("--out", out_dir, "Output directory (overrides the config)");
  app.add_flag("--diagnostics", diagnostics, "Also write per-round diagnostics traces");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!preset_name.empty()) {
      primed::PresetOverrides overrides;
      overrides.runs = runs;
      overrides.threads = threads;
      overrides.diagnostics = diagnostics;
      const std::uint64_t master = seed.value_or(1);
      const std::filesystem::path dir = out_dir.value_or("results-" + preset_name);
      auto files = primed::run_preset(preset_name, master, overrides, dir);
      for (const auto& f : files) std::cout << f.string() << '\n';
      return 0;
    }
    if (!config_path.empty()) {
      primed::ExperimentConfig config = primed::parse_config_file(config_path);
      if (seed) config.master_seed = *seed;
      if (runs) config.runs = *runs;
      if (threads) config.threads = *threads;
      if (out_dir) config.out_dir = *out_dir;
      if (diagnostics) config.diagnostics = true;
      auto files = primed::run_experiment(config, config.out_dir);
      for (const auto& f : files) std::cout << f.string() << '\n';
      return 0;
    }
    std::cerr << "one of --config or --preset is required\n";
    return kExitConfigError;
  } catch (const primed::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContractViolation;
  }
}
