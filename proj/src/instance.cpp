#include "primed/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primed {

int PrimingSpec::support_a() const {
  int a = 0;
  for (const auto& d : wear_in) a = std::max(a, d.support_max());
  return a;
}

int PrimingSpec::support_b() const {
  if (wear_out.empty()) throw std::logic_error("no wear-out distribution configured");
  int b = wear_out[0].support_min();
  for (const auto& d : wear_out) b = std::min(b, d.support_min());
  return b;
}

double PrimingSpec::expected_wear_in() const {
  if (wear_in.empty()) throw std::logic_error("wear-in distribution missing");
  if (wear_in.size() == 1) return wear_in[0].mean();
  double m = 0.0;
  for (const auto& d : wear_in) m = std::max(m, d.mean());
  return m;
}

std::vector<double> BanditInstance::means() const {
  std::vector<double> out;
  out.reserve(arms.size());
  for (const auto& a : arms) out.push_back(a.mean());
  return out;
}

int BanditInstance::best_arm() const {
  int best = 0;
  for (int j = 1; j < num_arms(); ++j)
    if (arms[static_cast<std::size_t>(j)].mean() > arms[static_cast<std::size_t>(best)].mean())
      best = j;
  return best;
}

double BanditInstance::best_mean() const {
  return arms[static_cast<std::size_t>(best_arm())].mean();
}

std::pair<int, int> BanditInstance::top_two() const {
  if (num_arms() < 2) throw std::logic_error("top_two requires at least two arms");
  int first = best_arm();
  int second = -1;
  for (int j = 0; j < num_arms(); ++j) {
    if (j == first) continue;
    if (second < 0 ||
        arms[static_cast<std::size_t>(j)].mean() > arms[static_cast<std::size_t>(second)].mean())
      second = j;
  }
  return {first, second};
}

std::vector<std::string> validate_instance(const BanditInstance& instance,
                                           bool require_wiwo_assumption) {
  std::vector<std::string> violations;
  const int k = instance.num_arms();
  if (k < 2) violations.push_back("K >= 2 fails");
  if (instance.horizon_T < 1) violations.push_back("horizon_T >= 1 fails");

  for (int j = 0; j < k; ++j) {
    double m = instance.arms[static_cast<std::size_t>(j)].mean();
    if (!std::isfinite(m) || m < 0.0 || m > 1.0) {
      violations.push_back("arm " + std::to_string(j) + " mean in [0,1] fails");
    }
  }

  const auto& priming = instance.priming;
  const int n = priming.window_N;
  if (n < 1) violations.push_back("window_N >= 1 fails");
  if (priming.wear_in.empty()) {
    violations.push_back("wear-in distribution missing");
    return violations;
  }
  if (priming.wear_in.size() != 1 && priming.wear_in.size() != static_cast<std::size_t>(k))
    violations.push_back("wear-in distribution count must be 1 or K");
  if (!priming.wear_out.empty() && priming.wear_out.size() != 1 &&
      priming.wear_out.size() != static_cast<std::size_t>(k))
    violations.push_back("wear-out distribution count must be 1 or K");

  for (const auto& d : priming.wear_in)
    if (d.support_min() < 0) violations.push_back("wear-in support >= 0 fails");
  const int a = priming.support_a();
  if (a > n) violations.push_back("a <= N fails");

  if (priming.has_wear_out()) {
    for (const auto& d : priming.wear_out)
      if (d.support_max() > n) violations.push_back("wear-out support <= N fails");
    const int b = priming.support_b();
    if (!(a < b)) violations.push_back("a < b fails");
    if (require_wiwo_assumption) {
      if (!(static_cast<double>(a) <= n / 2.0)) violations.push_back("a <= N/2 fails");
      if (!(n / 2.0 < static_cast<double>(b))) violations.push_back("N/2 < b fails");
    }
  } else if (require_wiwo_assumption) {
    if (!(static_cast<double>(a) <= n / 2.0)) violations.push_back("a <= N/2 fails");
  }

  return violations;
}

}  // namespace primed
