#pragma once

#include <vector>

#include "primed/policy.hpp"

namespace primed {

// Snapshot taken every time a phase completes (never on mid-phase horizon
// truncation): the members that were active, their cumulative-average
// estimates and the confidence width used for elimination.
struct PhaseEndRecord {
  int phase = 0;
  double delta_tilde = 1.0;
  long cumulative_target = 0;  // n_m
  std::vector<int> members;
  std::vector<long> plays;  // cumulative per member; equals n_m for all
  std::vector<double> estimates;
  std::vector<int> survivors;
};

// Phase-based elimination under wear-in: each phase m plays every active arm
// for n_m - n_{m-1} consecutive rounds (ascending index order), where n_m is
// the cumulative target from phase_length_wi with delta_tilde = 2^(1-m).
// At phase end arms are eliminated on cumulative averages, the width halves,
// and a lone survivor is played for the rest of the horizon. A horizon that
// lands mid-phase truncates without eliminating.
class WiUcbPolicy : public Policy {
 public:
  WiUcbPolicy(int num_arms, long horizon_T, double expected_d);

  int select(long t) override;
  void observe(const PolicyObservation& obs) override;
  std::string_view name() const override { return "wi-ucb"; }

  int phase() const { return phase_; }
  double confidence_width() const { return delta_; }
  const std::vector<int>& active_set() const { return active_; }
  const std::vector<PhaseEndRecord>& phase_log() const { return phase_log_; }

 private:
  void start_phase();

  long horizon_;
  double expected_d_;
  int phase_ = 1;
  double delta_ = 1.0;
  std::vector<int> active_;
  std::vector<long> plays_;
  std::vector<double> sums_;
  long target_prev_ = 0;  // n_{m-1}
  long target_cur_ = 0;   // n_m
  std::size_t block_index_ = 0;
  long block_remaining_ = 0;
  long t_ = 0;
  std::vector<PhaseEndRecord> phase_log_;
};

}  // namespace primed
