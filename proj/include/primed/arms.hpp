#pragma once

#include <memory>
#include <vector>

#include "primed/rng.hpp"

namespace primed {

// Reward distribution of a single arm, support in [0, 1].
class ArmSpec {
 public:
  enum class Kind { kBernoulli, kConstant, kDiscretizedBeta };

  static ArmSpec bernoulli(double p);
  static ArmSpec constant(double value);
  // Beta(alpha, beta) discretized onto grid_size equal-width bins of [0, 1];
  // each bin carries the Beta mass of the bin and pays its midpoint.
  static ArmSpec discretized_beta(double alpha, double beta, int grid_size);

  Kind kind() const { return kind_; }
  double mean() const { return mean_; }
  double sample(Rand& rng) const;

  double param_a() const { return a_; }  // p, value, or alpha
  double param_b() const { return b_; }  // beta
  int grid_size() const { return grid_; }

 private:
  ArmSpec(Kind kind, double a, double b, int grid);

  Kind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
  int grid_ = 0;
  double mean_ = 0.0;
  struct Table {
    std::vector<double> values;
    std::vector<double> cdf;
  };
  std::shared_ptr<const Table> table_;  // discretized beta only
};

}  // namespace primed
