#pragma once

#include <cstdint>
#include <vector>

#include "primed/policy.hpp"
#include "primed/rng.hpp"
#include "primed/wi_ucb.hpp"

namespace primed {

// Unordered arm pair played by a fair per-round coin.
struct CompoundArm {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const CompoundArm&, const CompoundArm&) = default;
};

// All K(K-1)/2 pairs with lo < hi in lexicographic order.
std::vector<CompoundArm> enumerate_compound_arms(int num_arms);

// ((mu*_(1) + mu*_(2)) - mu_lo - mu_hi) / 2 with mu*_(1), mu*_(2) the two
// largest means.
double compound_gap(const std::vector<double>& means, const CompoundArm& pair);

// Phase-based elimination over compound arms for the joint wear-in/wear-out
// setting. Each phase plays every active pair for n_m - n_{m-1} consecutive
// rounds (lexicographic pair order), choosing lo or hi each round by a fair
// coin from the policy's own stream; n_m comes from phase_length_wiwo. The
// surviving pair keeps randomizing until the horizon.
class WiWoUcbPolicy : public Policy {
 public:
  WiWoUcbPolicy(int num_arms, long horizon_T, int window_N, double expected_d,
                std::uint64_t seed);

  int select(long t) override;
  void observe(const PolicyObservation& obs) override;
  std::string_view name() const override { return "wiwo-ucb"; }

  int phase() const { return phase_; }
  double confidence_width() const { return delta_; }
  const std::vector<CompoundArm>& pairs() const { return pairs_; }
  // Ids index into pairs().
  const std::vector<int>& active_set() const { return active_; }
  const std::vector<PhaseEndRecord>& phase_log() const { return phase_log_; }

 private:
  void start_phase();
  int current_pair_id() const { return active_.size() == 1 ? active_[0] : active_[block_index_]; }

  long horizon_;
  int window_;
  double expected_d_;
  std::vector<CompoundArm> pairs_;
  Rand rng_;
  int phase_ = 1;
  double delta_ = 1.0;
  std::vector<int> active_;
  std::vector<long> plays_;
  std::vector<double> sums_;
  long target_prev_ = 0;
  long target_cur_ = 0;
  std::size_t block_index_ = 0;
  long block_remaining_ = 0;
  long t_ = 0;
  bool pending_ = false;
  int pending_arm_ = -1;
  std::vector<PhaseEndRecord> phase_log_;
};

}  // namespace primed
