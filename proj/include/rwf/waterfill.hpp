// Single-user best response: water-filling under a per-channel mask and a
// total power budget.
#pragma once

#include <span>
#include <vector>

namespace rwf {

inline constexpr double kBudgetTol = 1e-10;
inline constexpr int kMaxBisect = 200;

struct BestResponseResult {
  std::vector<double> power;
  /// Multiplier of the budget constraint; 1 / water level when the budget binds.
  double lambda = 0.0;
  bool budget_active = false;
};

/// Maximizes sum_k log(1 + p_k / s_eff_k) subject to 0 <= p_k <= p_mask_k and
/// sum_k p_k <= p_max.
///
/// When the masks alone fit in the budget every channel is filled to its mask
/// and lambda is 0. Otherwise the water level mu is located by bisection on
/// [min s, max s + p_max], and p_k = clamp(mu - s_k, 0, p_mask_k). Channels with
/// equal floors receive equal power. Throws InvalidInput on non-finite or
/// non-positive data and SolverFailure if the budget residual exceeds
/// kBudgetTol after kMaxBisect halvings.
BestResponseResult best_response(std::span<const double> s_eff, double p_max,
                                 std::span<const double> p_mask);

/// KKT check for the problem above. Stationarity is checked on the marginal
/// rate 1 / (s_k + p_k): equal to lambda on interior channels, at most lambda
/// on silent channels, at least lambda on channels at their mask.
bool verify_kkt(std::span<const double> s_eff, double p_max, std::span<const double> p_mask,
                std::span<const double> power, double lambda, double tol);

/// sum_k log(1 + p_k / s_k)
double rate_sum(std::span<const double> s_eff, std::span<const double> power);

}  // namespace rwf
