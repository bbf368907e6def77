#include "primed/phases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primed {

namespace {

long constructive_length(int m, double delta_tilde, double horizon_T, double moment) {
  if (m < 1) throw std::invalid_argument("phase index must be >= 1");
  if (!(delta_tilde > 0.0 && delta_tilde <= 1.0))
    throw std::invalid_argument("delta_tilde must lie in (0, 1]");
  if (!(horizon_T >= 2.0)) throw std::invalid_argument("horizon must be >= 2");
  if (moment < 0.0) throw std::invalid_argument("wear-in moment must be >= 0");

  const double log_t = std::log(horizon_T);
  const double s1 = std::sqrt((4.0 / 9.0) * log_t * log_t + 4.0 * moment * log_t);
  const double inner =
      std::sqrt(log_t) +
      std::sqrt(log_t + (4.0 / 3.0) * delta_tilde * log_t + 2.0 * delta_tilde * s1);
  return static_cast<long>(std::ceil(inner * inner / (delta_tilde * delta_tilde)));
}

}  // namespace

long phase_length_wi(int m, double delta_tilde, double horizon_T, double expected_d) {
  return constructive_length(m, delta_tilde, horizon_T, static_cast<double>(m) * expected_d);
}

long phase_length_wiwo(int m, double delta_tilde, double horizon_T, int window_N,
                       double expected_d) {
  if (window_N < 1) throw std::invalid_argument("window_N must be >= 1");
  return constructive_length(m, delta_tilde, horizon_T,
                             static_cast<double>(window_N) * static_cast<double>(m) * expected_d);
}

bool phase_length_bound_check(long n_m, int m, double delta_tilde, double horizon_T,
                              double expected_d, std::optional<int> window_N) {
  const double log_t = std::log(horizon_T);
  const double moment =
      (window_N ? static_cast<double>(*window_N) : 1.0) * static_cast<double>(m) * expected_d;
  const double bound = 1.0 + 4.0 * log_t / (delta_tilde * delta_tilde) +
                       (16.0 / 3.0) * log_t / delta_tilde +
                       8.0 * std::sqrt(moment * log_t) / delta_tilde;
  return static_cast<double>(n_m) <= bound;
}

std::vector<int> eliminate_members(const std::vector<int>& active,
                                   const std::vector<double>& estimates, double delta_tilde) {
  if (active.empty()) throw std::invalid_argument("active set must be non-empty");
  if (active.size() != estimates.size())
    throw std::invalid_argument("estimates must be parallel to the active set");
  const double best = *std::max_element(estimates.begin(), estimates.end());
  std::vector<int> kept;
  kept.reserve(active.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (estimates[i] + delta_tilde / 2.0 < best - delta_tilde / 2.0) continue;
    kept.push_back(active[i]);
  }
  return kept;
}

}  // namespace primed
