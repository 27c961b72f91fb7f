// Equilibrium uniqueness and algorithm convergence conditions, the small
// amount of dense linear algebra they need, and equilibrium diagnostics.
#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "rwf/model.hpp"

namespace rwf {

/// Dense row-major n x n matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  SquareMatrix transposed() const;
  /// (A + A^T) / 2
  SquareMatrix symmetric_part() const;
  /// A^T A
  SquareMatrix gram() const;
  bool is_symmetric() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

inline constexpr double kPowerIterTol = 1e-10;
inline constexpr int kPowerIterMax = 10000;

/// Perron root of an entrywise nonnegative matrix by power iteration on the
/// shifted matrix A + cI, c > 0, from the all-ones vector. The shift keeps
/// every iterate strictly positive, so the Collatz-Wielandt ratios
/// min_i (Ax)_i / x_i <= rho(A) <= max_i (Ax)_i / x_i bracket the answer at
/// every step; iteration stops once the bracket is within `tol` relative.
/// Throws InvalidInput for negative or non-finite entries, SolverFailure if
/// the bracket has not closed after kPowerIterMax steps.
double spectral_radius(const SquareMatrix& a, double tol = kPowerIterTol);

/// Largest singular value, sqrt(rho(A^T A)).
double operator_norm_l2(const SquareMatrix& a, double tol = kPowerIterTol);

double frobenius_norm(const SquareMatrix& a);

/// Interference ratio matrix of one channel: entry (i, j) is
/// gain(j, i, k) / gain(i, i, k) off the diagonal, 0 on it.
SquareMatrix channel_ratio_matrix(const NetworkScenario& scn, std::size_t k);

/// Entry (i, j) is max_k gain(j, i, k) / gain(i, i, k) off the diagonal.
SquareMatrix max_ratio_matrix(const NetworkScenario& scn);

struct ConditionReport {
  /// Per channel: min{rho((S+S^T)/2), ||S||_2} + ||eps(k)||_2.
  std::vector<double> per_channel_lhs;
  bool uniqueness_holds = false;
  /// ||S_max||_2 + sqrt(M) ||s_max||_2.
  double convergence_lhs = 0.0;
  bool convergence_holds = false;
};

/// Sufficient condition for a unique equilibrium. eps(k) collects the
/// effective relative perturbation |multiplier - 1| of every user on channel
/// k, which is eps in worst-case mode, 0 in nominal mode and
/// eps |2 delta0 - 1| in probabilistic mode.
ConditionReport check_uniqueness(const NetworkScenario& scn, const UncertaintySpec& unc);

/// Sufficient condition for convergence of both schedules. `s_bar_bound` is a
/// users x channels table of nominal normalized interference values; entry
/// i of s_max is max_k s_bar_bound[i][k] * eps_eff(i, k).
ConditionReport check_convergence(const NetworkScenario& scn, const UncertaintySpec& unc,
                                  const std::vector<std::vector<double>>& s_bar_bound);

/// Normalized interference with every opponent transmitting at its mask:
/// the elementwise largest value s_bar can take over feasible profiles.
std::vector<std::vector<double>> interference_upper_bound(const NetworkScenario& scn);

/// Both checks, with the convergence bound taken from interference_upper_bound.
ConditionReport check_conditions(const NetworkScenario& scn, const UncertaintySpec& unc);

inline constexpr double kActivityTol = 1e-3;

/// Fraction of channels on which at most one user transmits more than
/// `activity_tol`. 1 means the allocation is fully orthogonal.
double orthogonality_index(const PowerProfile& profile, double activity_tol = kActivityTol);

/// Sum of user utilities, each evaluated under `unc_for_evaluation`.
double social_utility(const NetworkScenario& scn, const PowerProfile& profile,
                      const UncertaintySpec& unc_for_evaluation);

nlohmann::json to_json(const ConditionReport& report);

}  // namespace rwf
