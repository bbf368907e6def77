#include "primed/env.hpp"

#include <stdexcept>

namespace primed {

int recent_count(std::span<const int> history_recent_first, int current_arm, int window_N) {
  const std::size_t in_window =
      std::min(history_recent_first.size(), static_cast<std::size_t>(window_N > 0 ? window_N - 1 : 0));
  int count = 1;
  for (std::size_t i = 0; i < in_window; ++i)
    if (history_recent_first[i] == current_arm) ++count;
  return count;
}

Env::Env(const BanditInstance& instance, std::uint64_t seed, bool trace_diagnostics)
    : instance_(&instance),
      rng_(seed),
      diagnostics_(trace_diagnostics),
      ring_(static_cast<std::size_t>(instance.priming.window_N), -1),
      ring_counts_(static_cast<std::size_t>(instance.num_arms()), 0) {
  auto violations = validate_instance(instance, /*require_wiwo_assumption=*/false);
  if (!violations.empty())
    throw std::invalid_argument("invalid instance: " + violations.front());
}

int Env::count_if_played(int arm) const {
  const int n = instance_->priming.window_N;
  int count = 1 + ring_counts_[static_cast<std::size_t>(arm)];
  // The ring stores the last min(t, N) actions but the count window covers
  // only N-1 previous rounds; when the ring is full its oldest entry has
  // already aged out of the count.
  if (ring_len_ == n && ring_[static_cast<std::size_t>(ring_start_)] == arm) --count;
  return count;
}

std::vector<int> Env::window_snapshot() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ring_len_));
  const int n = static_cast<int>(ring_.size());
  for (int i = 0; i < ring_len_; ++i)
    out.push_back(ring_[static_cast<std::size_t>((ring_start_ + i) % n)]);
  return out;
}

Observation Env::step(int arm) {
  if (t_ >= instance_->horizon_T) throw std::logic_error("env_step past horizon");
  if (arm < 0 || arm >= instance_->num_arms())
    throw std::out_of_range("arm index out of range");

  const auto& priming = instance_->priming;
  const int n = priming.window_N;
  const int count = count_if_played(arm);

  const double raw = instance_->arms[static_cast<std::size_t>(arm)].sample(rng_);
  const int wear_in = priming.wear_in_for(arm).sample(rng_);
  const DiscreteDist* out_dist = priming.wear_out_for(arm);
  const int wear_out = out_dist != nullptr ? out_dist->sample(rng_) : n;

  Observation obs;
  obs.t = t_;
  obs.arm = arm;
  obs.accrued_x = (wear_out >= count && count >= wear_in) ? raw : 0.0;
  if (diagnostics_) {
    obs.has_diagnostics = true;
    obs.raw_r = raw;
    obs.wear_in_draw = wear_in;
    obs.wear_out_draw = wear_out;
    obs.window_count = count;
  }

  if (ring_len_ == n) {
    --ring_counts_[static_cast<std::size_t>(ring_[static_cast<std::size_t>(ring_start_)])];
    ring_[static_cast<std::size_t>(ring_start_)] = arm;
    ring_start_ = (ring_start_ + 1) % n;
  } else {
    ring_[static_cast<std::size_t>((ring_start_ + ring_len_) % n)] = arm;
    ++ring_len_;
  }
  ++ring_counts_[static_cast<std::size_t>(arm)];
  ++t_;
  return obs;
}

}  // namespace primed
