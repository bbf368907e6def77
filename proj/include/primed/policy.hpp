#pragma once

#include <string_view>

namespace primed {

// What a learner is allowed to see: round, its own action, accrued reward.
struct PolicyObservation {
  long t = 0;
  int arm = 0;
  double accrued_x = 0.0;
};

// Uniform behavioral contract. select(t) must be called with t equal to the
// number of observations fed so far and may only depend on internal state and
// the policy's own random stream; observe feeds back the censored reward.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual int select(long t) = 0;
  virtual void observe(const PolicyObservation& obs) = 0;
  virtual std::string_view name() const = 0;
};

}  // namespace primed
