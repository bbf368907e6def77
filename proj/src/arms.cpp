#include "primed/arms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace primed {

ArmSpec::ArmSpec(Kind kind, double a, double b, int grid)
    : kind_(kind), a_(a), b_(b), grid_(grid) {}

ArmSpec ArmSpec::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli p must be in [0,1]");
  ArmSpec arm(Kind::kBernoulli, p, 0.0, 0);
  arm.mean_ = p;
  return arm;
}

ArmSpec ArmSpec::constant(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("constant value must be in [0,1]");
  ArmSpec arm(Kind::kConstant, value, 0.0, 0);
  arm.mean_ = value;
  return arm;
}

ArmSpec ArmSpec::discretized_beta(double alpha, double beta, int grid_size) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("beta shape parameters must be > 0");
  if (grid_size < 1) throw std::invalid_argument("grid_size must be >= 1");
  ArmSpec arm(Kind::kDiscretizedBeta, alpha, beta, grid_size);

  auto table = std::make_shared<Table>();
  table->values.resize(static_cast<std::size_t>(grid_size));
  table->cdf.resize(static_cast<std::size_t>(grid_size));
  double acc = 0.0;
  double mean_acc = 0.0;
  double prev_cdf = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    double hi_edge = static_cast<double>(i + 1) / grid_size;
    double hi_cdf = (i + 1 == grid_size) ? 1.0 : boost::math::ibeta(alpha, beta, hi_edge);
    double p = std::max(hi_cdf - prev_cdf, 0.0);
    prev_cdf = hi_cdf;
    double mid = (i + 0.5) / grid_size;
    table->values[static_cast<std::size_t>(i)] = mid;
    acc += p;
    table->cdf[static_cast<std::size_t>(i)] = acc;
    mean_acc += mid * p;
  }
  // acc == 1 up to rounding; pin the last entry so sampling never falls off.
  for (double& c : table->cdf) c /= acc;
  table->cdf.back() = 1.0;
  arm.mean_ = mean_acc / acc;
  arm.table_ = std::move(table);
  return arm;
}

double ArmSpec::sample(Rand& rng) const {
  switch (kind_) {
    case Kind::kBernoulli:
      return rng.next_double() < a_ ? 1.0 : 0.0;
    case Kind::kConstant:
      return a_;
    case Kind::kDiscretizedBeta: {
      double u = rng.next_double();
      const auto& cdf = table_->cdf;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      if (it == cdf.end()) --it;
      return table_->values[static_cast<std::size_t>(it - cdf.begin())];
    }
  }
  return 0.0;
}

}  // namespace primed
