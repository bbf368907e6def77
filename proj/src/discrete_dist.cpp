#include "primed/discrete_dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primed {

namespace {

double normal_cdf(double x, double mean, double sigma) {
  return 0.5 * std::erfc(-(x - mean) / (sigma * std::sqrt(2.0)));
}

}  // namespace

DiscreteDist::DiscreteDist(int support_min, std::vector<double> pmf)
    : min_(support_min), pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw std::invalid_argument("pmf must be non-empty");
  double total = 0.0;
  for (double p : pmf_) {
    if (!(p >= 0.0)) throw std::invalid_argument("pmf entries must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("pmf must sum to 1 within 1e-12");

  cdf_.resize(pmf_.size());
  double acc = 0.0;
  double mean_acc = 0.0;
  for (std::size_t i = 0; i < pmf_.size(); ++i) {
    acc += pmf_[i];
    cdf_[i] = acc;
    mean_acc += static_cast<double>(min_ + static_cast<int>(i)) * pmf_[i];
  }
  cdf_.back() = 1.0;
  mean_ = mean_acc;
}

DiscreteDist DiscreteDist::point(int value) {
  return DiscreteDist(value, {1.0});
}

DiscreteDist DiscreteDist::uniform_range(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_range requires lo <= hi");
  std::vector<double> pmf(static_cast<std::size_t>(hi - lo) + 1,
                          1.0 / (static_cast<double>(hi - lo) + 1.0));
  return DiscreteDist(lo, std::move(pmf));
}

DiscreteDist DiscreteDist::folded_normal(double mean, double sigma, int cap) {
  if (cap < 0) throw std::invalid_argument("folded_normal cap must be >= 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("folded_normal sigma must be > 0");
  std::vector<double> pmf(static_cast<std::size_t>(cap) + 1, 0.0);
  // P(round(|g|) = k) = P(k - 1/2 < |g| <= k + 1/2), with all mass at or
  // beyond cap - 1/2 collapsed into the cap bucket.
  for (int k = 0; k < cap; ++k) {
    double hi = k + 0.5;
    double lo = k - 0.5;
    double p = normal_cdf(hi, mean, sigma) - normal_cdf(lo, mean, sigma);
    if (k >= 1) p += normal_cdf(-lo, mean, sigma) - normal_cdf(-hi, mean, sigma);
    pmf[static_cast<std::size_t>(k)] = std::max(p, 0.0);
  }
  if (cap >= 1) {
    double edge = cap - 0.5;
    double tail = (1.0 - normal_cdf(edge, mean, sigma)) + normal_cdf(-edge, mean, sigma);
    pmf[static_cast<std::size_t>(cap)] = std::max(tail, 0.0);
  } else {
    pmf[0] = 1.0;
  }
  double total = 0.0;
  for (double p : pmf) total += p;
  for (double& p : pmf) p /= total;
  return DiscreteDist(0, std::move(pmf));
}

double DiscreteDist::pmf_at(int k) const {
  if (k < support_min() || k > support_max()) return 0.0;
  return pmf_[static_cast<std::size_t>(k - min_)];
}

double DiscreteDist::cdf(int k) const {
  if (k < support_min()) return 0.0;
  if (k >= support_max()) return 1.0;
  return cdf_[static_cast<std::size_t>(k - min_)];
}

double DiscreteDist::sf(int k) const {
  if (k <= support_min()) return 1.0;
  if (k > support_max()) return 0.0;
  return 1.0 - cdf_[static_cast<std::size_t>(k - 1 - min_)];
}

int DiscreteDist::sample(Rand& rng) const {
  double u = rng.next_double();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return min_ + static_cast<int>(it - cdf_.begin());
}

}  // namespace primed
