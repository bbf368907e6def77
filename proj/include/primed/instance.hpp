#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primed/arms.hpp"
#include "primed/discrete_dist.hpp"

namespace primed {

// Recency-window censoring parameters. Wear-in (and optionally wear-out)
// thresholds are either shared across arms (one entry) or per-arm (K entries).
struct PrimingSpec {
  int window_N = 1;
  std::vector<DiscreteDist> wear_in;   // size 1 or K
  std::vector<DiscreteDist> wear_out;  // size 0 (absent), 1, or K

  bool has_wear_out() const { return !wear_out.empty(); }

  const DiscreteDist& wear_in_for(int arm) const {
    return wear_in.size() == 1 ? wear_in[0] : wear_in[static_cast<std::size_t>(arm)];
  }
  const DiscreteDist* wear_out_for(int arm) const {
    if (wear_out.empty()) return nullptr;
    return wear_out.size() == 1 ? &wear_out[0] : &wear_out[static_cast<std::size_t>(arm)];
  }

  // Largest wear-in support endpoint over arms.
  int support_a() const;
  // Smallest wear-out support start over arms; only valid when present.
  int support_b() const;

  // Wear-in first moment handed to the phase-scheduling policies: the shared
  // distribution's mean, or the max over arms when per-arm (conservative).
  double expected_wear_in() const;
};

struct BanditInstance {
  std::vector<ArmSpec> arms;
  PrimingSpec priming;
  long horizon_T = 1;

  int num_arms() const { return static_cast<int>(arms.size()); }
  std::vector<double> means() const;
  int best_arm() const;  // lowest index on ties
  double best_mean() const;
  // Indices of the two largest means; ties broken by lowest index.
  std::pair<int, int> top_two() const;
};

// Report-style validation. Empty result means valid. With
// require_wiwo_assumption the stronger support condition a <= N/2 < b is
// also checked.
std::vector<std::string> validate_instance(const BanditInstance& instance,
                                           bool require_wiwo_assumption);

}  // namespace primed
