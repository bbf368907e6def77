#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "primed/env.hpp"
#include "primed/harness.hpp"
#include "primed/phases.hpp"
#include "primed/wi_ucb.hpp"
#include "primed/wiwo_ucb.hpp"

using namespace primed;

namespace {

BanditInstance constant_instance(std::vector<double> values, long horizon) {
  BanditInstance instance;
  for (double v : values) instance.arms.push_back(ArmSpec::constant(v));
  instance.horizon_T = horizon;
  instance.priming.window_N = 1;
  instance.priming.wear_in.push_back(DiscreteDist::point(0));
  return instance;
}

}  // namespace

TEST_CASE("phase length anchor values") {
  // High-precision evaluations of the closed form.
  CHECK(phase_length_wi(1, 1.0, std::exp(3.0), 0.0) == 26);
  CHECK(phase_length_wiwo(1, 1.0, std::exp(3.0), 10, 1.0) == 52);
}

TEST_CASE("phase length degenerate and reduction cases") {
  // Without a wear-in moment the phase index drops out.
  for (int m = 1; m <= 8; ++m)
    CHECK(phase_length_wi(m, 0.25, 1000.0, 0.0) == phase_length_wi(1, 0.25, 1000.0, 0.0));
  // Window of one reduces the joint schedule to the wear-in one.
  for (int m = 1; m <= 6; ++m)
    CHECK(phase_length_wiwo(m, 0.5, 5000.0, 1, 2.5) == phase_length_wi(m, 0.5, 5000.0, 2.5));
  CHECK(phase_length_wiwo(3, 0.5, 5000.0, 25, 0.0) == phase_length_wi(3, 0.5, 5000.0, 0.0));
  CHECK_THROWS_AS(phase_length_wi(1, 1.0, 1.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(phase_length_wi(1, 1.0, 100.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(phase_length_wi(1, 0.0, 100.0, 0.0), std::invalid_argument);
}

TEST_CASE("phase schedule strictly increases with the phase index") {
  for (double horizon : {50.0, 5000.0, 1e6}) {
    for (double expected_d : {0.0, 1.0, 5.0, 20.0}) {
      long prev_wi = 0;
      long prev_wiwo = 0;
      for (int m = 1; m <= 20; ++m) {
        const double delta = std::pow(2.0, 1 - m);
        const long wi = phase_length_wi(m, delta, horizon, expected_d);
        const long wiwo = phase_length_wiwo(m, delta, horizon, 10, expected_d);
        CHECK(wi > prev_wi);
        CHECK(wiwo > prev_wiwo);
        prev_wi = wi;
        prev_wiwo = wiwo;
      }
    }
  }
}

TEST_CASE("constructive values satisfy the closed-form bound") {
  for (int m = 1; m <= 12; ++m) {
    for (int log_t = 1; log_t <= 10; ++log_t) {
      const double horizon = std::exp(static_cast<double>(log_t));
      for (double expected_d : {0.0, 1.0, 5.0, 20.0}) {
        const double delta = std::pow(2.0, 1 - m);
        const long wi = phase_length_wi(m, delta, horizon, expected_d);
        CHECK(phase_length_bound_check(wi, m, delta, horizon, expected_d, std::nullopt));
        for (int window : {1, 5, 10, 50}) {
          const long wiwo = phase_length_wiwo(m, delta, horizon, window, expected_d);
          CHECK(phase_length_bound_check(wiwo, m, delta, horizon, expected_d, window));
        }
      }
    }
  }
  // One notch above the bound fails; continues the anchor example where
  // the bound evaluates to 1 + 12 + 16 = 29 >= 26.
  CHECK(phase_length_bound_check(29, 1, 1.0, std::exp(3.0), 0.0, std::nullopt));
  CHECK_FALSE(phase_length_bound_check(30, 1, 1.0, std::exp(3.0), 0.0, std::nullopt));
}

TEST_CASE("eliminate keeps the maximizer and drops strict losers") {
  SUBCASE("width one spares an extreme gap") {
    auto kept = eliminate_members({0, 1}, {1.0, 0.0}, 1.0);
    CHECK(kept == std::vector<int>{0, 1});
  }
  SUBCASE("width one half eliminates the zero estimate") {
    auto kept = eliminate_members({0, 1}, {1.0, 0.0}, 0.5);
    CHECK(kept == std::vector<int>{0});
  }
  SUBCASE("singleton unchanged") {
    auto kept = eliminate_members({4}, {0.3}, 0.125);
    CHECK(kept == std::vector<int>{4});
  }
  SUBCASE("contract violations") {
    CHECK_THROWS_AS(eliminate_members({}, {}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eliminate_members({0}, {0.1, 0.2}, 0.5), std::invalid_argument);
  }
}

TEST_CASE("wear-in policy hand trace on constant rewards") {
  const long horizon = 300;
  auto instance = constant_instance({1.0, 0.0}, horizon);
  const long n1 = phase_length_wi(1, 1.0, static_cast<double>(horizon), 0.0);
  const long n2 = phase_length_wi(2, 0.5, static_cast<double>(horizon), 0.0);
  REQUIRE(2 * n2 <= horizon);

  WiUcbPolicy policy(2, horizon, 0.0);
  RunTrace trace = run_episode(instance, policy, 7);

  // Phase 1: arm 0 for n1 rounds then arm 1 for n1 rounds; both survive
  // because the width-one elimination condition is strict.
  for (long t = 0; t < n1; ++t) CHECK(trace.actions[static_cast<std::size_t>(t)] == 0);
  for (long t = n1; t < 2 * n1; ++t) CHECK(trace.actions[static_cast<std::size_t>(t)] == 1);
  // Phase 2: each arm for n2 - n1 more rounds; then arm 1 is eliminated
  // (0 + 0.25 < 1 - 0.25) and arm 0 is played to the horizon.
  for (long t = 2 * n1; t < n1 + n2; ++t)
    CHECK(trace.actions[static_cast<std::size_t>(t)] == 0);
  for (long t = n1 + n2; t < 2 * n2; ++t)
    CHECK(trace.actions[static_cast<std::size_t>(t)] == 1);
  for (long t = 2 * n2; t < horizon; ++t)
    CHECK(trace.actions[static_cast<std::size_t>(t)] == 0);

  REQUIRE(policy.phase_log().size() == 2);
  CHECK(policy.phase_log()[0].survivors == std::vector<int>{0, 1});
  CHECK(policy.phase_log()[1].survivors == std::vector<int>{0});
  CHECK(policy.phase_log()[1].estimates[0] == 1.0);
  CHECK(policy.phase_log()[1].estimates[1] == 0.0);
}

TEST_CASE("wear-in policy phase structure on stochastic rewards") {
  BanditInstance instance;
  for (double p : {0.9, 0.6, 0.4, 0.2}) instance.arms.push_back(ArmSpec::bernoulli(p));
  instance.horizon_T = 4000;
  instance.priming.window_N = 8;
  instance.priming.wear_in.push_back(DiscreteDist::uniform_range(0, 2));

  WiUcbPolicy policy(4, instance.horizon_T, instance.priming.expected_wear_in());
  RunTrace trace = run_episode(instance, policy, 31);

  // Phase boundary balance: every surviving member's cumulative play count
  // equals the phase target.
  for (const auto& record : policy.phase_log()) {
    for (long plays : record.plays) CHECK(plays == record.cumulative_target);
    CHECK(!record.survivors.empty());
  }

  // Within a phase the action sequence is a concatenation of constant runs,
  // one per active arm, in ascending index order.
  long t = 0;
  long prev_target = 0;
  for (const auto& record : policy.phase_log()) {
    const long inc = record.cumulative_target - prev_target;
    for (int member : record.members) {
      for (long i = 0; i < inc; ++i) {
        REQUIRE(trace.actions[static_cast<std::size_t>(t)] == member);
        ++t;
      }
    }
    prev_target = record.cumulative_target;
  }
}

TEST_CASE("horizon inside the first phase truncates without eliminating") {
  auto instance = constant_instance({1.0, 0.0}, 20);
  const long n1 = phase_length_wi(1, 1.0, 20.0, 0.0);
  REQUIRE(2 * n1 > 20);  // phase 1 cannot complete

  WiUcbPolicy policy(2, 20, 0.0);
  RunTrace trace = run_episode(instance, policy, 9);
  CHECK(trace.actions.size() == 20);
  CHECK(policy.phase_log().empty());
  CHECK(policy.active_set().size() == 2);

  WiWoUcbPolicy joint(3, 20, 1, 0.0, 4);
  auto three = constant_instance({1.0, 0.5, 0.0}, 20);
  run_episode(three, joint, 9);
  CHECK(joint.phase_log().empty());
  CHECK(joint.active_set().size() == 3);
}

TEST_CASE("best arm survives under no priming with clear gaps") {
  BanditInstance instance;
  for (double p : {0.9, 0.7, 0.5, 0.3}) instance.arms.push_back(ArmSpec::bernoulli(p));
  instance.horizon_T = 3000;
  instance.priming.window_N = 1;
  instance.priming.wear_in.push_back(DiscreteDist::point(0));

  int kept_best = 0;
  const int runs = 500;
  for (int r = 0; r < runs; ++r) {
    WiUcbPolicy policy(4, instance.horizon_T, 0.0);
    run_episode(instance, policy, derive_seed(555, static_cast<std::uint64_t>(r)));
    bool best_active = false;
    for (int j : policy.active_set())
      if (j == 0) best_active = true;
    if (best_active) ++kept_best;
  }
  CHECK(kept_best >= static_cast<int>(0.99 * runs));
}

TEST_CASE("compound arm enumeration and gaps") {
  CHECK(enumerate_compound_arms(2) == std::vector<CompoundArm>{{0, 1}});
  auto four = enumerate_compound_arms(4);
  CHECK(four.size() == 6);
  CHECK(four.front() == CompoundArm{0, 1});
  CHECK(four.back() == CompoundArm{2, 3});
  CHECK(enumerate_compound_arms(20).size() == 190);
  CHECK_THROWS_AS(enumerate_compound_arms(1), std::invalid_argument);

  const std::vector<double> means = {0.9, 0.6, 0.3};
  CHECK(compound_gap(means, {0, 1}) == doctest::Approx(0.0));
  CHECK(compound_gap(means, {1, 2}) == doctest::Approx(0.3));
  const std::vector<double> equal = {0.4, 0.4, 0.4, 0.4};
  for (const auto& pair : enumerate_compound_arms(4))
    CHECK(compound_gap(equal, pair) == doctest::Approx(0.0));
}

TEST_CASE("two-arm joint policy randomizes over the single pair forever") {
  auto instance = constant_instance({1.0, 0.0}, 10000);
  WiWoUcbPolicy policy(2, instance.horizon_T, 1, 0.0, 99);
  RunTrace trace = run_episode(instance, policy, 13);
  CHECK(policy.active_set().size() == 1);
  long lo_plays = 0;
  for (int arm : trace.actions)
    if (arm == 0) ++lo_plays;
  const double fraction = static_cast<double>(lo_plays) / 10000.0;
  CHECK(fraction > 0.48);
  CHECK(fraction < 0.52);
}

TEST_CASE("joint policy eliminates inferior pairs on constant rewards") {
  // Pair (0,1) has compound value 1; pairs (0,2) and (1,2) sit at 1/2 and are
  // gone once the width drops below the gap, i.e. by the end of phase 3.
  auto instance = constant_instance({1.0, 1.0, 0.0}, 2000);
  WiWoUcbPolicy policy(3, instance.horizon_T, 1, 0.0, 5);
  run_episode(instance, policy, 21);

  // The half-gap pairs may straddle the strict phase-2 cut but cannot pass
  // the phase-3 one, so at most three phases run before only (0,1) is left.
  REQUIRE(!policy.phase_log().empty());
  CHECK(policy.phase_log().size() <= 3);
  CHECK(policy.phase_log().back().survivors == std::vector<int>{0});
  REQUIRE(policy.active_set().size() == 1);
  CHECK(policy.pairs()[static_cast<std::size_t>(policy.active_set()[0])] == CompoundArm{0, 1});

  // Phase boundary balance holds for pairs as well.
  for (const auto& record : policy.phase_log())
    for (long plays : record.plays) CHECK(plays == record.cumulative_target);
}

TEST_CASE("joint policy within-pair coin is fair inside blocks") {
  // Three arms so blocks are genuine phase segments rather than the terminal
  // single-pair regime.
  auto instance = constant_instance({1.0, 1.0, 1.0}, 4000);
  WiWoUcbPolicy policy(3, instance.horizon_T, 1, 0.0, 1234);
  RunTrace trace = run_episode(instance, policy, 77);
  REQUIRE(!policy.phase_log().empty());

  // Count lo-plays inside every completed block of every phase.
  long t = 0;
  long prev_target = 0;
  for (const auto& record : policy.phase_log()) {
    const long inc = record.cumulative_target - prev_target;
    for (int member : record.members) {
      const CompoundArm& pair = policy.pairs()[static_cast<std::size_t>(member)];
      long lo = 0;
      for (long i = 0; i < inc; ++i) {
        const int arm = trace.actions[static_cast<std::size_t>(t)];
        REQUIRE((arm == pair.lo || arm == pair.hi));
        if (arm == pair.lo) ++lo;
        ++t;
      }
      const double fraction = static_cast<double>(lo) / static_cast<double>(inc);
      const double slack = 3.0 * 0.5 / std::sqrt(static_cast<double>(inc));
      CHECK(fraction > 0.5 - slack);
      CHECK(fraction < 0.5 + slack);
    }
    prev_target = record.cumulative_target;
  }
}
