#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primed/config.hpp"
#include "primed/harness.hpp"

namespace primed {

inline constexpr const char* kVersion = "0.1.0";

// Canned experiment instances. Bernoulli means are drawn once from the master
// seed and reused across runs and policies; manifests record the resolved
// values.
BanditInstance make_wear_in_instance(std::uint64_t master_seed);
BanditInstance make_wear_in_out_instance(std::uint64_t master_seed);
// `multiplicity` copies the largest drawn mean into the top 1/3/7 arms.
BanditInstance make_switching_instance(std::uint64_t master_seed, int multiplicity);
BanditInstance make_ed_sweep_instance(std::uint64_t master_seed, double target_mean);

// Regret curves for every configured policy, in config order.
std::vector<std::pair<std::string, RegretCurve>> run_policy_suite(const ExperimentConfig& config);

// Config templates matching the presets (instance + policy list + benchmark).
ExperimentConfig wear_in_config(std::uint64_t master_seed, long runs, int threads);
ExperimentConfig wear_in_out_config(std::uint64_t master_seed, long runs, int threads);

struct PresetOverrides {
  std::optional<long> runs;
  std::optional<int> threads;
  bool diagnostics = false;
};

// Materializes the named preset ("wear-in", "wear-in-out", "switching",
// "ed-sweep"), runs it, and writes CSV outputs plus a manifest.json that is
// sufficient to re-run the experiment identically. Returns the files written.
std::vector<std::filesystem::path> run_preset(const std::string& name,
                                              std::uint64_t master_seed,
                                              const PresetOverrides& overrides,
                                              const std::filesystem::path& out_dir);

// Config-driven experiment: regret CSV for all policies (plus a diagnostics
// trace of replication 0 per policy when enabled) and a manifest.
std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& config,
                                                  const std::filesystem::path& out_dir);

}  // namespace primed
