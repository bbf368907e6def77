#include "primed/wiwo_ucb.hpp"

#include <algorithm>
#include <stdexcept>

#include "primed/phases.hpp"

namespace primed {

std::vector<CompoundArm> enumerate_compound_arms(int num_arms) {
  if (num_arms < 2) throw std::invalid_argument("need at least two arms to form pairs");
  std::vector<CompoundArm> pairs;
  pairs.reserve(static_cast<std::size_t>(num_arms) * (num_arms - 1) / 2);
  for (int lo = 0; lo < num_arms; ++lo)
    for (int hi = lo + 1; hi < num_arms; ++hi) pairs.push_back({lo, hi});
  return pairs;
}

double compound_gap(const std::vector<double>& means, const CompoundArm& pair) {
  if (means.size() < 2) throw std::invalid_argument("need at least two means");
  double top1 = -1.0, top2 = -1.0;
  for (double m : means) {
    if (m > top1) {
      top2 = top1;
      top1 = m;
    } else if (m > top2) {
      top2 = m;
    }
  }
  return (top1 + top2 - means[static_cast<std::size_t>(pair.lo)] -
          means[static_cast<std::size_t>(pair.hi)]) /
         2.0;
}

WiWoUcbPolicy::WiWoUcbPolicy(int num_arms, long horizon_T, int window_N, double expected_d,
                             std::uint64_t seed)
    : horizon_(horizon_T),
      window_(window_N),
      expected_d_(expected_d),
      pairs_(enumerate_compound_arms(num_arms)),
      rng_(seed),
      active_(pairs_.size()),
      plays_(pairs_.size(), 0),
      sums_(pairs_.size(), 0.0) {
  if (horizon_T < 2) throw std::invalid_argument("horizon must be >= 2");
  for (std::size_t i = 0; i < pairs_.size(); ++i) active_[i] = static_cast<int>(i);
  target_cur_ =
      phase_length_wiwo(phase_, delta_, static_cast<double>(horizon_), window_, expected_d_);
  start_phase();
}

void WiWoUcbPolicy::start_phase() {
  block_index_ = 0;
  block_remaining_ = target_cur_ - target_prev_;
  if (block_remaining_ <= 0) throw std::logic_error("phase schedule must be increasing");
}

int WiWoUcbPolicy::select(long) {
  if (!pending_) {
    const CompoundArm& pair = pairs_[static_cast<std::size_t>(current_pair_id())];
    pending_arm_ = rng_.next_coin() ? pair.lo : pair.hi;
    pending_ = true;
  }
  return pending_arm_;
}

void WiWoUcbPolicy::observe(const PolicyObservation& obs) {
  if (obs.t != t_) throw std::logic_error("observation round mismatch");
  if (!pending_ || obs.arm != pending_arm_)
    throw std::logic_error("unexpected arm in observation");
  pending_ = false;
  ++t_;

  const int pair_id = current_pair_id();
  ++plays_[static_cast<std::size_t>(pair_id)];
  sums_[static_cast<std::size_t>(pair_id)] += obs.accrued_x;
  if (active_.size() == 1) return;
  if (--block_remaining_ > 0) return;

  ++block_index_;
  block_remaining_ = target_cur_ - target_prev_;
  if (block_index_ < active_.size()) return;

  PhaseEndRecord record;
  record.phase = phase_;
  record.delta_tilde = delta_;
  record.cumulative_target = target_cur_;
  record.members = active_;
  record.estimates.reserve(active_.size());
  for (int id : active_) {
    record.plays.push_back(plays_[static_cast<std::size_t>(id)]);
    record.estimates.push_back(sums_[static_cast<std::size_t>(id)] /
                               static_cast<double>(plays_[static_cast<std::size_t>(id)]));
  }
  active_ = eliminate_members(active_, record.estimates, delta_);
  record.survivors = active_;
  phase_log_.push_back(std::move(record));

  delta_ /= 2.0;
  ++phase_;
  target_prev_ = target_cur_;
  if (active_.size() > 1) {
    target_cur_ =
        phase_length_wiwo(phase_, delta_, static_cast<double>(horizon_), window_, expected_d_);
    start_phase();
  }
}

}  // namespace primed
