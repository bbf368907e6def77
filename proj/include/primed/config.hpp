#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "primed/harness.hpp"
#include "primed/instance.hpp"

namespace primed {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolicySpec {
  std::string name;
  std::optional<double> expected_d;  // nullopt = "auto" (from the wear-in pmf)
};

struct ExperimentConfig {
  BanditInstance instance;
  std::vector<PolicySpec> policies;
  BenchmarkKind benchmark = BenchmarkKind::kBestArm;
  BenchmarkMode benchmark_mode = BenchmarkMode::kAnalytic;
  long runs = 1;
  std::uint64_t master_seed = 0;
  int threads = 1;
  std::string out_dir = "results";
  bool diagnostics = false;
};

// Strict parsing: unknown keys anywhere are rejected, violations carry field
// paths, and the instance must pass validation (with the stronger support
// assumption when "wiwo-ucb" is listed).
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

BenchmarkKind parse_benchmark_kind(const std::string& name);

// Fresh-policy factory for one policy spec of the experiment.
PolicyFactory make_policy_factory(const ExperimentConfig& config, const PolicySpec& spec);

// Resolved-config JSON used by manifests; distributions are materialized as
// explicit pmfs so a re-run needs nothing beyond this document.
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

}  // namespace primed
