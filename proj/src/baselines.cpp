#include "primed/baselines.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace primed {

double ucb1_index(double mean_hat, long n_j, double t) {
  return mean_hat + std::sqrt(2.0 * std::log(t) / static_cast<double>(n_j));
}

double moss_index(double mean_hat, long n_j, double horizon_T, int k_arms) {
  double ratio = horizon_T / (static_cast<double>(k_arms) * static_cast<double>(n_j));
  double bonus = std::sqrt(std::max(0.0, std::log(ratio)) / static_cast<double>(n_j));
  return mean_hat + bonus;
}

namespace {

void check_round(long expected, const PolicyObservation& obs) {
  if (obs.t != expected) throw std::logic_error("observation round mismatch");
}

}  // namespace

Ucb1Policy::Ucb1Policy(int num_arms)
    : plays_(static_cast<std::size_t>(num_arms), 0),
      sums_(static_cast<std::size_t>(num_arms), 0.0) {}

int Ucb1Policy::select(long t) {
  const int k = static_cast<int>(plays_.size());
  if (t < k) return static_cast<int>(t);
  int best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < k; ++j) {
    if (plays_[static_cast<std::size_t>(j)] == 0) return j;
    double value = ucb1_index(sums_[static_cast<std::size_t>(j)] /
                                  static_cast<double>(plays_[static_cast<std::size_t>(j)]),
                              plays_[static_cast<std::size_t>(j)], static_cast<double>(t));
    if (value > best_index) {
      best_index = value;
      best = j;
    }
  }
  return best;
}

void Ucb1Policy::observe(const PolicyObservation& obs) {
  check_round(t_, obs);
  ++plays_[static_cast<std::size_t>(obs.arm)];
  sums_[static_cast<std::size_t>(obs.arm)] += obs.accrued_x;
  ++t_;
}

MossPolicy::MossPolicy(int num_arms, long horizon_T)
    : plays_(static_cast<std::size_t>(num_arms), 0),
      sums_(static_cast<std::size_t>(num_arms), 0.0),
      horizon_(horizon_T) {}

int MossPolicy::select(long t) {
  const int k = static_cast<int>(plays_.size());
  if (t < k) return static_cast<int>(t);
  int best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < k; ++j) {
    if (plays_[static_cast<std::size_t>(j)] == 0) return j;
    double value = moss_index(sums_[static_cast<std::size_t>(j)] /
                                  static_cast<double>(plays_[static_cast<std::size_t>(j)]),
                              plays_[static_cast<std::size_t>(j)],
                              static_cast<double>(horizon_), k);
    if (value > best_index) {
      best_index = value;
      best = j;
    }
  }
  return best;
}

void MossPolicy::observe(const PolicyObservation& obs) {
  check_round(t_, obs);
  ++plays_[static_cast<std::size_t>(obs.arm)];
  sums_[static_cast<std::size_t>(obs.arm)] += obs.accrued_x;
  ++t_;
}

SePolicy::SePolicy(int num_arms, long horizon_T)
    : active_(static_cast<std::size_t>(num_arms)),
      plays_(static_cast<std::size_t>(num_arms), 0),
      sums_(static_cast<std::size_t>(num_arms), 0.0),
      horizon_(horizon_T) {
  std::iota(active_.begin(), active_.end(), 0);
}

int SePolicy::select(long) { return active_[cursor_]; }

void SePolicy::observe(const PolicyObservation& obs) {
  check_round(t_, obs);
  if (obs.arm != active_[cursor_])
    throw std::invalid_argument("observation for an arm not pending (eliminated or out of turn)");
  ++plays_[static_cast<std::size_t>(obs.arm)];
  sums_[static_cast<std::size_t>(obs.arm)] += obs.accrued_x;
  ++t_;
  ++cursor_;
  if (cursor_ < active_.size()) return;
  cursor_ = 0;
  if (active_.size() <= 1) return;

  const double log_t = std::log(static_cast<double>(horizon_));
  double max_lower = -1.0;
  for (int j : active_) {
    double mean = sums_[static_cast<std::size_t>(j)] / static_cast<double>(plays_[static_cast<std::size_t>(j)]);
    double radius = std::sqrt(2.0 * log_t / static_cast<double>(plays_[static_cast<std::size_t>(j)]));
    max_lower = std::max(max_lower, mean - radius);
  }
  std::vector<int> kept;
  kept.reserve(active_.size());
  for (int j : active_) {
    double mean = sums_[static_cast<std::size_t>(j)] / static_cast<double>(plays_[static_cast<std::size_t>(j)]);
    double radius = std::sqrt(2.0 * log_t / static_cast<double>(plays_[static_cast<std::size_t>(j)]));
    if (mean + radius >= max_lower) kept.push_back(j);
  }
  active_ = std::move(kept);
}

}  // namespace primed
