#pragma once

#include <optional>
#include <vector>

namespace primed {

// Cumulative per-member play target for phase m (m >= 1) under wear-in only:
// the smallest count that brings the phase estimate within delta_tilde/2 of
// the mean with high probability. Exact constructive value:
//   s1  = sqrt((4/9) ln^2 T + 4 m E[D] ln T)
//   n_m = ceil((1/delta^2) (sqrt(ln T) + sqrt(ln T + (4/3) delta ln T + 2 delta s1))^2)
long phase_length_wi(int m, double delta_tilde, double horizon_T, double expected_d);

// Same schedule with the wear-in moment inflated by the window: m E[D] is
// replaced by N m E[D] inside s1.
long phase_length_wiwo(int m, double delta_tilde, double horizon_T, int window_N,
                       double expected_d);

// Closed-form upper bound the constructive values must respect:
//   n_m <= 1 + 4 lnT/delta^2 + (16/3) lnT/delta + 8 sqrt(M E[D] lnT)/delta
// with M = m (window_N absent) or M = N m.
bool phase_length_bound_check(long n_m, int m, double delta_tilde, double horizon_T,
                              double expected_d, std::optional<int> window_N);

// Phase-end elimination: drops exactly the members whose estimate + delta/2 is
// strictly below (max estimate) - delta/2. The maximizer always survives.
// `estimates` is parallel to `active`.
std::vector<int> eliminate_members(const std::vector<int>& active,
                                   const std::vector<double>& estimates, double delta_tilde);

}  // namespace primed
