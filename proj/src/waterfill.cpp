#include "rwf/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rwf/model.hpp"

namespace rwf {

namespace {

double allocated(std::span<const double> s, std::span<const double> mask, double level) {
  double total = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) total += std::clamp(level - s[k], 0.0, mask[k]);
  return total;
}

}  // namespace

BestResponseResult best_response(std::span<const double> s_eff, double p_max,
                                 std::span<const double> p_mask) {
  if (s_eff.empty() || s_eff.size() != p_mask.size())
    throw InvalidInput("best_response: floor and mask lengths differ");
  if (!std::isfinite(p_max) || !(p_max > 0.0)) throw InvalidInput("best_response: bad budget");
  for (std::size_t k = 0; k < s_eff.size(); ++k) {
    if (!std::isfinite(s_eff[k]) || !(s_eff[k] > 0.0))
      throw InvalidInput("best_response: interference floor must be positive and finite");
    if (!std::isfinite(p_mask[k]) || !(p_mask[k] > 0.0))
      throw InvalidInput("best_response: mask must be positive and finite");
  }

  BestResponseResult out;
  double mask_total = 0.0;
  for (double c : p_mask) mask_total += c;
  if (mask_total <= p_max) {
    out.power.assign(p_mask.begin(), p_mask.end());
    return out;
  }

  const auto [min_it, max_it] = std::minmax_element(s_eff.begin(), s_eff.end());
  double lo = *min_it;             // allocates nothing
  double hi = *max_it + p_max;     // allocates at least p_max
  for (int it = 0; it < kMaxBisect; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (allocated(s_eff, p_mask, mid) > p_max)
      hi = mid;
    else
      lo = mid;
  }
  double level = 0.5 * (lo + hi);

  // Bisection fixes which channels are silent, free, or capped; solve the
  // budget equation exactly on that partition.
  double capped = 0.0;
  double free_floor = 0.0;
  std::size_t free_count = 0;
  for (std::size_t k = 0; k < s_eff.size(); ++k) {
    const double fill = level - s_eff[k];
    if (fill >= p_mask[k]) {
      capped += p_mask[k];
    } else if (fill > 0.0) {
      free_floor += s_eff[k];
      ++free_count;
    }
  }
  if (free_count > 0) {
    const double polished = (p_max - capped + free_floor) / static_cast<double>(free_count);
    if (std::abs(allocated(s_eff, p_mask, polished) - p_max) <=
        std::abs(allocated(s_eff, p_mask, level) - p_max))
      level = polished;
  }

  out.power.resize(s_eff.size());
  for (std::size_t k = 0; k < s_eff.size(); ++k)
    out.power[k] = std::clamp(level - s_eff[k], 0.0, p_mask[k]);
  double total = 0.0;
  for (double p : out.power) total += p;
  if (std::abs(total - p_max) > kBudgetTol)
    throw SolverFailure("best_response: budget residual " + std::to_string(total - p_max) +
                        " after bisection");
  out.lambda = 1.0 / level;
  out.budget_active = true;
  return out;
}

bool verify_kkt(std::span<const double> s_eff, double p_max, std::span<const double> p_mask,
                std::span<const double> power, double lambda, double tol) {
  const std::size_t n = s_eff.size();
  if (p_mask.size() != n || power.size() != n) return false;
  if (lambda < -tol) return false;

  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (power[k] < -tol || power[k] > p_mask[k] + tol) return false;
    total += power[k];
  }
  if (total > p_max + tol) return false;
  if (std::abs(lambda * (total - p_max)) > tol) return false;

  const double slack = tol * std::max(1.0, lambda);
  for (std::size_t k = 0; k < n; ++k) {
    const double marginal = 1.0 / (s_eff[k] + power[k]);
    const bool silent = power[k] <= tol;
    const bool capped = power[k] >= p_mask[k] - tol;
    if (silent && capped) continue;  // mask below tolerance: any marginal works
    if (silent) {
      if (marginal > lambda + slack) return false;
    } else if (capped) {
      if (marginal < lambda - slack) return false;
    } else if (std::abs(marginal - lambda) > slack) {
      return false;
    }
  }
  return true;
}

double rate_sum(std::span<const double> s_eff, std::span<const double> power) {
  double u = 0.0;
  for (std::size_t k = 0; k < s_eff.size(); ++k) u += std::log1p(power[k] / s_eff[k]);
  return u;
}

}  // namespace rwf
