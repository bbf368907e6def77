#pragma once

#include <vector>

#include "primed/policy.hpp"

namespace primed {

// mean_hat + sqrt(2 ln(t) / n_j). Natural logarithm.
double ucb1_index(double mean_hat, long n_j, double t);

// mean_hat + sqrt(max(0, ln(T / (K n_j))) / n_j).
double moss_index(double mean_hat, long n_j, double horizon_T, int k_arms);

// Index policies play each arm once in index order before scoring; argmax
// selection breaks ties toward the lowest arm index.
class Ucb1Policy : public Policy {
 public:
  explicit Ucb1Policy(int num_arms);
  int select(long t) override;
  void observe(const PolicyObservation& obs) override;
  std::string_view name() const override { return "ucb1"; }

 private:
  std::vector<long> plays_;
  std::vector<double> sums_;
  long t_ = 0;
};

class MossPolicy : public Policy {
 public:
  MossPolicy(int num_arms, long horizon_T);
  int select(long t) override;
  void observe(const PolicyObservation& obs) override;
  std::string_view name() const override { return "moss"; }

 private:
  std::vector<long> plays_;
  std::vector<double> sums_;
  long horizon_;
  long t_ = 0;
};

// Successive elimination: round-robin over the active set; after each full
// block drops arm i when mean_i + r_i < max_j (mean_j - r_j) with
// r_j = sqrt(2 ln(T) / n_j).
class SePolicy : public Policy {
 public:
  SePolicy(int num_arms, long horizon_T);
  int select(long t) override;
  void observe(const PolicyObservation& obs) override;
  std::string_view name() const override { return "se"; }

  const std::vector<int>& active_set() const { return active_; }

 private:
  std::vector<int> active_;
  std::vector<long> plays_;
  std::vector<double> sums_;
  std::size_t cursor_ = 0;
  long horizon_;
  long t_ = 0;
};

}  // namespace primed
