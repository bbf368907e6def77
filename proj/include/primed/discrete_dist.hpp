#pragma once

#include <vector>

#include "primed/rng.hpp"

namespace primed {

// Integer-supported distribution given by an explicit pmf over a contiguous
// range [support_min, support_max]. Construction validates the pmf
// (non-negative entries summing to 1 within 1e-12) and precomputes the
// cumulative table used for inverse-CDF sampling.
class DiscreteDist {
 public:
  DiscreteDist(int support_min, std::vector<double> pmf);

  static DiscreteDist point(int value);
  static DiscreteDist uniform_range(int lo, int hi);  // inclusive
  // min(cap, round(|g|)) with g ~ Normal(mean, sigma); pmf tabulated from the
  // normal CDF, support {0, ..., cap}.
  static DiscreteDist folded_normal(double mean, double sigma, int cap);

  int support_min() const { return min_; }
  int support_max() const { return min_ + static_cast<int>(pmf_.size()) - 1; }

  double pmf_at(int k) const;
  double mean() const { return mean_; }

  // P(X <= k) and P(X >= k) for any integer k.
  double cdf(int k) const;
  double sf(int k) const;

  int sample(Rand& rng) const;

 private:
  int min_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;  // cumulative sums of pmf_
  double mean_;
};

}  // namespace primed
