#include "primed/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "primed/baselines.hpp"
#include "primed/csv.hpp"
#include "primed/wi_ucb.hpp"
#include "primed/wiwo_ucb.hpp"

namespace primed {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

void require_object(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
}

void check_keys(const json& node, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& item : node.items())
    if (!allowed.contains(item.key())) fail(path + "." + item.key(), "unknown key");
}

double get_number(const json& node, const std::string& path, const char* key) {
  if (!node.contains(key)) fail(path + "." + key, "missing");
  if (!node[key].is_number()) fail(path + "." + key, "expected a number");
  return node[key].get<double>();
}

long get_integer(const json& node, const std::string& path, const char* key) {
  if (!node.contains(key)) fail(path + "." + key, "missing");
  if (!node[key].is_number_integer()) fail(path + "." + key, "expected an integer");
  return node[key].get<long>();
}

std::string get_string(const json& node, const std::string& path, const char* key) {
  if (!node.contains(key)) fail(path + "." + key, "missing");
  if (!node[key].is_string()) fail(path + "." + key, "expected a string");
  return node[key].get<std::string>();
}

ArmSpec parse_arm(const json& node, const std::string& path) {
  require_object(node, path);
  const std::string kind = get_string(node, path, "kind");
  try {
    if (kind == "bernoulli") {
      check_keys(node, path, {"kind", "p"});
      return ArmSpec::bernoulli(get_number(node, path, "p"));
    }
    if (kind == "constant") {
      check_keys(node, path, {"kind", "value"});
      return ArmSpec::constant(get_number(node, path, "value"));
    }
    if (kind == "discretized_beta") {
      check_keys(node, path, {"kind", "alpha", "beta", "grid_size"});
      return ArmSpec::discretized_beta(get_number(node, path, "alpha"),
                                       get_number(node, path, "beta"),
                                       static_cast<int>(get_integer(node, path, "grid_size")));
    }
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown arm kind '" + kind + "'");
}

DiscreteDist parse_dist(const json& node, const std::string& path) {
  require_object(node, path);
  const std::string kind = get_string(node, path, "kind");
  try {
    if (kind == "point") {
      check_keys(node, path, {"kind", "value"});
      return DiscreteDist::point(static_cast<int>(get_integer(node, path, "value")));
    }
    if (kind == "uniform") {
      check_keys(node, path, {"kind", "lo", "hi"});
      return DiscreteDist::uniform_range(static_cast<int>(get_integer(node, path, "lo")),
                                         static_cast<int>(get_integer(node, path, "hi")));
    }
    if (kind == "pmf") {
      check_keys(node, path, {"kind", "min", "probs"});
      if (!node.contains("probs") || !node["probs"].is_array())
        fail(path + ".probs", "expected an array");
      std::vector<double> probs;
      for (const auto& p : node["probs"]) {
        if (!p.is_number()) fail(path + ".probs", "expected numbers");
        probs.push_back(p.get<double>());
      }
      return DiscreteDist(static_cast<int>(get_integer(node, path, "min")), std::move(probs));
    }
    if (kind == "folded_normal") {
      check_keys(node, path, {"kind", "mean", "sigma", "cap"});
      return DiscreteDist::folded_normal(get_number(node, path, "mean"),
                                         get_number(node, path, "sigma"),
                                         static_cast<int>(get_integer(node, path, "cap")));
    }
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown distribution kind '" + kind + "'");
}

std::vector<DiscreteDist> parse_dist_list(const json& node, const std::string& path) {
  std::vector<DiscreteDist> dists;
  if (node.is_array()) {
    int i = 0;
    for (const auto& entry : node) {
      dists.push_back(parse_dist(entry, path + "[" + std::to_string(i) + "]"));
      ++i;
    }
    if (dists.empty()) fail(path, "list must be non-empty");
  } else {
    dists.push_back(parse_dist(node, path));
  }
  return dists;
}

BanditInstance parse_instance(const json& node, const std::string& path) {
  require_object(node, path);
  check_keys(node, path, {"horizon", "arms", "priming"});
  BanditInstance instance;
  instance.horizon_T = get_integer(node, path, "horizon");
  if (!node.contains("arms") || !node["arms"].is_array()) fail(path + ".arms", "expected an array");
  int i = 0;
  for (const auto& arm : node["arms"]) {
    instance.arms.push_back(parse_arm(arm, path + ".arms[" + std::to_string(i) + "]"));
    ++i;
  }
  if (!node.contains("priming")) fail(path + ".priming", "missing");
  const json& priming = node["priming"];
  require_object(priming, path + ".priming");
  check_keys(priming, path + ".priming", {"window", "wear_in", "wear_out"});
  instance.priming.window_N = static_cast<int>(get_integer(priming, path + ".priming", "window"));
  if (!priming.contains("wear_in")) fail(path + ".priming.wear_in", "missing");
  instance.priming.wear_in = parse_dist_list(priming["wear_in"], path + ".priming.wear_in");
  if (priming.contains("wear_out"))
    instance.priming.wear_out = parse_dist_list(priming["wear_out"], path + ".priming.wear_out");
  return instance;
}

const std::set<std::string>& known_policies() {
  static const std::set<std::string> names = {"ucb1", "moss", "se", "wi-ucb", "wiwo-ucb"};
  return names;
}

PolicySpec parse_policy(const json& node, const std::string& path) {
  require_object(node, path);
  check_keys(node, path, {"name", "expected_d", "use_exact_formula"});
  PolicySpec spec;
  spec.name = get_string(node, path, "name");
  if (!known_policies().contains(spec.name))
    fail(path + ".name", "unknown policy '" + spec.name + "'");
  const bool phased = spec.name == "wi-ucb" || spec.name == "wiwo-ucb";
  if (node.contains("expected_d")) {
    if (!phased) fail(path + ".expected_d", "only valid for wi-ucb / wiwo-ucb");
    const json& value = node["expected_d"];
    if (value.is_string()) {
      if (value.get<std::string>() != "auto") fail(path + ".expected_d", "expected \"auto\" or a number");
    } else if (value.is_number()) {
      spec.expected_d = value.get<double>();
      if (*spec.expected_d < 0.0) fail(path + ".expected_d", "must be >= 0");
    } else {
      fail(path + ".expected_d", "expected \"auto\" or a number");
    }
  }
  if (node.contains("use_exact_formula")) {
    if (!phased) fail(path + ".use_exact_formula", "only valid for wi-ucb / wiwo-ucb");
    if (!node["use_exact_formula"].is_boolean() || !node["use_exact_formula"].get<bool>())
      fail(path + ".use_exact_formula",
           "only the exact constructive schedule is available; must be true");
  }
  return spec;
}

ExperimentConfig parse_root(const json& root) {
  require_object(root, "config");
  check_keys(root, "config",
             {"instance", "policies", "benchmark", "runs", "seed", "threads", "out",
              "diagnostics"});
  ExperimentConfig config;
  if (!root.contains("instance")) fail("config.instance", "missing");
  config.instance = parse_instance(root["instance"], "config.instance");

  if (!root.contains("policies") || !root["policies"].is_array() || root["policies"].empty())
    fail("config.policies", "expected a non-empty array");
  int i = 0;
  for (const auto& node : root["policies"]) {
    config.policies.push_back(parse_policy(node, "config.policies[" + std::to_string(i) + "]"));
    ++i;
  }

  if (!root.contains("benchmark")) fail("config.benchmark", "missing");
  const json& bench = root["benchmark"];
  require_object(bench, "config.benchmark");
  check_keys(bench, "config.benchmark", {"kind", "mode"});
  config.benchmark = parse_benchmark_kind(get_string(bench, "config.benchmark", "kind"));
  if (bench.contains("mode")) {
    const std::string mode = get_string(bench, "config.benchmark", "mode");
    if (mode == "analytic") config.benchmark_mode = BenchmarkMode::kAnalytic;
    else if (mode == "simulated") config.benchmark_mode = BenchmarkMode::kSimulated;
    else fail("config.benchmark.mode", "expected \"analytic\" or \"simulated\"");
  }

  config.runs = get_integer(root, "config", "runs");
  if (config.runs < 1) fail("config.runs", "must be >= 1");
  if (!root.contains("seed")) fail("config.seed", "missing");
  if (!root["seed"].is_number_integer()) fail("config.seed", "expected an integer");
  config.master_seed = root["seed"].get<std::uint64_t>();
  if (root.contains("threads")) {
    config.threads = static_cast<int>(get_integer(root, "config", "threads"));
    if (config.threads < 1) fail("config.threads", "must be >= 1");
  }
  if (root.contains("out")) config.out_dir = get_string(root, "config", "out");
  if (root.contains("diagnostics")) {
    if (!root["diagnostics"].is_boolean()) fail("config.diagnostics", "expected a boolean");
    config.diagnostics = root["diagnostics"].get<bool>();
  }

  bool wiwo_listed = false;
  for (const auto& spec : config.policies)
    if (spec.name == "wiwo-ucb") wiwo_listed = true;
  auto violations = validate_instance(config.instance, wiwo_listed);
  if (!violations.empty()) {
    std::string joined;
    for (const auto& v : violations) {
      if (!joined.empty()) joined += "; ";
      joined += v;
    }
    fail("config.instance", joined);
  }
  return config;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return parse_root(root);
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

BenchmarkKind parse_benchmark_kind(const std::string& name) {
  if (name == "best-arm") return BenchmarkKind::kBestArm;
  if (name == "top-two-random") return BenchmarkKind::kTopTwoRandom;
  if (name == "top-two-alternating") return BenchmarkKind::kTopTwoAlternating;
  throw ConfigError("config.benchmark.kind: unknown benchmark '" + name + "'");
}

PolicyFactory make_policy_factory(const ExperimentConfig& config, const PolicySpec& spec) {
  const BanditInstance& instance = config.instance;
  const int k = instance.num_arms();
  const long horizon = instance.horizon_T;
  if (spec.name == "ucb1")
    return [k](std::uint64_t) { return std::make_unique<Ucb1Policy>(k); };
  if (spec.name == "moss")
    return [k, horizon](std::uint64_t) { return std::make_unique<MossPolicy>(k, horizon); };
  if (spec.name == "se")
    return [k, horizon](std::uint64_t) { return std::make_unique<SePolicy>(k, horizon); };
  const double expected_d =
      spec.expected_d ? *spec.expected_d : instance.priming.expected_wear_in();
  if (spec.name == "wi-ucb")
    return [k, horizon, expected_d](std::uint64_t) {
      return std::make_unique<WiUcbPolicy>(k, horizon, expected_d);
    };
  if (spec.name == "wiwo-ucb") {
    const int window = instance.priming.window_N;
    return [k, horizon, window, expected_d](std::uint64_t seed) {
      return std::make_unique<WiWoUcbPolicy>(k, horizon, window, expected_d, seed);
    };
  }
  throw ConfigError("unknown policy '" + spec.name + "'");
}

namespace {

nlohmann::ordered_json dist_to_json(const DiscreteDist& dist) {
  nlohmann::ordered_json node;
  node["kind"] = "pmf";
  node["min"] = dist.support_min();
  nlohmann::ordered_json probs = nlohmann::ordered_json::array();
  for (int k = dist.support_min(); k <= dist.support_max(); ++k)
    probs.push_back(dist.pmf_at(k));
  node["probs"] = std::move(probs);
  return node;
}

nlohmann::ordered_json arm_to_json(const ArmSpec& arm) {
  nlohmann::ordered_json node;
  switch (arm.kind()) {
    case ArmSpec::Kind::kBernoulli:
      node["kind"] = "bernoulli";
      node["p"] = arm.param_a();
      break;
    case ArmSpec::Kind::kConstant:
      node["kind"] = "constant";
      node["value"] = arm.param_a();
      break;
    case ArmSpec::Kind::kDiscretizedBeta:
      node["kind"] = "discretized_beta";
      node["alpha"] = arm.param_a();
      node["beta"] = arm.param_b();
      node["grid_size"] = arm.grid_size();
      break;
  }
  return node;
}

}  // namespace

nlohmann::ordered_json config_to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json instance;
  instance["horizon"] = config.instance.horizon_T;
  nlohmann::ordered_json arms = nlohmann::ordered_json::array();
  for (const auto& arm : config.instance.arms) arms.push_back(arm_to_json(arm));
  instance["arms"] = std::move(arms);
  nlohmann::ordered_json priming;
  priming["window"] = config.instance.priming.window_N;
  if (config.instance.priming.wear_in.size() == 1) {
    priming["wear_in"] = dist_to_json(config.instance.priming.wear_in[0]);
  } else {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& d : config.instance.priming.wear_in) list.push_back(dist_to_json(d));
    priming["wear_in"] = std::move(list);
  }
  if (config.instance.priming.has_wear_out()) {
    if (config.instance.priming.wear_out.size() == 1) {
      priming["wear_out"] = dist_to_json(config.instance.priming.wear_out[0]);
    } else {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& d : config.instance.priming.wear_out) list.push_back(dist_to_json(d));
      priming["wear_out"] = std::move(list);
    }
  }
  instance["priming"] = std::move(priming);
  root["instance"] = std::move(instance);

  nlohmann::ordered_json policies = nlohmann::ordered_json::array();
  for (const auto& spec : config.policies) {
    nlohmann::ordered_json node;
    node["name"] = spec.name;
    if (spec.name == "wi-ucb" || spec.name == "wiwo-ucb") {
      if (spec.expected_d) node["expected_d"] = *spec.expected_d;
      else node["expected_d"] = "auto";
    }
    policies.push_back(std::move(node));
  }
  root["policies"] = std::move(policies);

  nlohmann::ordered_json bench;
  bench["kind"] = benchmark_name(config.benchmark);
  bench["mode"] = config.benchmark_mode == BenchmarkMode::kAnalytic ? "analytic" : "simulated";
  root["benchmark"] = std::move(bench);
  root["runs"] = config.runs;
  root["seed"] = config.master_seed;
  root["diagnostics"] = config.diagnostics;
  return root;
}

}  // namespace primed
