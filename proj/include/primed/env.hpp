#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primed/instance.hpp"
#include "primed/rng.hpp"

namespace primed {

struct Observation {
  long t = 0;
  int arm = 0;
  double accrued_x = 0.0;
  // Diagnostics, valid only when the environment traces them.
  bool has_diagnostics = false;
  double raw_r = 0.0;
  int wear_in_draw = 0;
  int wear_out_draw = 0;
  int window_count = 0;
};

// Plays of current_arm within the last window_N rounds including the current
// play. history_recent_first holds previous actions, most recent first; only
// its first min(size, window_N - 1) entries fall inside the window.
int recent_count(std::span<const int> history_recent_first, int current_arm, int window_N);

// Reward process for one episode: samples raw reward and wear thresholds each
// round and censors by the arm's recency-window play count. Counts cover
// exactly the last window_N rounds including the current play, so they lie in
// {1, ..., N} and a wear-out threshold equal to N never censors.
class Env {
 public:
  Env(const BanditInstance& instance, std::uint64_t seed, bool trace_diagnostics = false);

  // Sampling order per round is fixed: reward, wear-in, wear-out.
  Observation step(int arm);

  long t() const { return t_; }
  long horizon() const { return instance_->horizon_T; }
  // Window count the given arm would have if played this round.
  int count_if_played(int arm) const;
  // Stored window, oldest first; length min(t, N).
  std::vector<int> window_snapshot() const;

 private:
  const BanditInstance* instance_;
  Rand rng_;
  bool diagnostics_;
  long t_ = 0;
  // Ring buffer over the last min(t, N) actions plus per-arm counts of the
  // ring contents.
  std::vector<int> ring_;
  std::vector<int> ring_counts_;
  int ring_start_ = 0;
  int ring_len_ = 0;
};

}  // namespace primed
