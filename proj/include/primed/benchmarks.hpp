#pragma once

#include <cstdint>
#include <vector>

#include "primed/instance.hpp"
#include "primed/policy.hpp"
#include "primed/rng.hpp"

namespace primed {

enum class BenchmarkKind { kBestArm, kTopTwoRandom, kTopTwoAlternating };

const char* benchmark_name(BenchmarkKind kind);

// Clairvoyant reference policies. They know the instance means, never consult
// observations, and endure the same reward censoring as any learner.
class BenchmarkPolicy : public Policy {
 public:
  BenchmarkPolicy(const BanditInstance& instance, BenchmarkKind kind, std::uint64_t seed);

  int select(long t) override;
  void observe(const PolicyObservation&) override {}
  std::string_view name() const override { return benchmark_name(kind_); }

 private:
  BenchmarkKind kind_;
  int best_ = 0;
  int second_ = 0;
  Rand rng_;
};

// Exact per-round expected accrued reward E[X_t] under the benchmark's own
// action process (0-based t). Censoring by both wear-in and wear-out is
// accounted for; with wear-out absent the survival factor is 1.
double benchmark_expected_reward(const BanditInstance& instance, BenchmarkKind kind, long t);

// Prefix sums of the above for t_rounds rounds (index r = cumulative through
// round r, i.e. t = r + 1 rounds played).
std::vector<double> benchmark_expected_cumulative(const BanditInstance& instance,
                                                  BenchmarkKind kind, long t_rounds);

}  // namespace primed
