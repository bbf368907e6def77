#include "primed/wi_ucb.hpp"

#include <stdexcept>

#include "primed/phases.hpp"

namespace primed {

WiUcbPolicy::WiUcbPolicy(int num_arms, long horizon_T, double expected_d)
    : horizon_(horizon_T),
      expected_d_(expected_d),
      active_(static_cast<std::size_t>(num_arms)),
      plays_(static_cast<std::size_t>(num_arms), 0),
      sums_(static_cast<std::size_t>(num_arms), 0.0) {
  if (num_arms < 2) throw std::invalid_argument("need at least two arms");
  if (horizon_T < 2) throw std::invalid_argument("horizon must be >= 2");
  for (int j = 0; j < num_arms; ++j) active_[static_cast<std::size_t>(j)] = j;
  target_cur_ = phase_length_wi(phase_, delta_, static_cast<double>(horizon_), expected_d_);
  start_phase();
}

void WiUcbPolicy::start_phase() {
  block_index_ = 0;
  block_remaining_ = target_cur_ - target_prev_;
  if (block_remaining_ <= 0) throw std::logic_error("phase schedule must be increasing");
}

int WiUcbPolicy::select(long) {
  if (active_.size() == 1) return active_[0];
  return active_[block_index_];
}

void WiUcbPolicy::observe(const PolicyObservation& obs) {
  if (obs.t != t_) throw std::logic_error("observation round mismatch");
  ++t_;
  if (active_.size() == 1) {
    if (obs.arm != active_[0]) throw std::logic_error("unexpected arm in observation");
    ++plays_[static_cast<std::size_t>(obs.arm)];
    sums_[static_cast<std::size_t>(obs.arm)] += obs.accrued_x;
    return;
  }
  if (obs.arm != active_[block_index_]) throw std::logic_error("unexpected arm in observation");
  ++plays_[static_cast<std::size_t>(obs.arm)];
  sums_[static_cast<std::size_t>(obs.arm)] += obs.accrued_x;
  if (--block_remaining_ > 0) return;

  ++block_index_;
  block_remaining_ = target_cur_ - target_prev_;
  if (block_index_ < active_.size()) return;

  // Phase complete: estimates over all cumulative plays, then eliminate.
  PhaseEndRecord record;
  record.phase = phase_;
  record.delta_tilde = delta_;
  record.cumulative_target = target_cur_;
  record.members = active_;
  record.estimates.reserve(active_.size());
  for (int j : active_) {
    record.plays.push_back(plays_[static_cast<std::size_t>(j)]);
    record.estimates.push_back(sums_[static_cast<std::size_t>(j)] /
                               static_cast<double>(plays_[static_cast<std::size_t>(j)]));
  }
  active_ = eliminate_members(active_, record.estimates, delta_);
  record.survivors = active_;
  phase_log_.push_back(std::move(record));

  delta_ /= 2.0;
  ++phase_;
  target_prev_ = target_cur_;
  if (active_.size() > 1) {
    target_cur_ = phase_length_wi(phase_, delta_, static_cast<double>(horizon_), expected_d_);
    start_phase();
  }
}

}  // namespace primed
