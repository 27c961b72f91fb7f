// Scenario generators, the fixed three-user reference scenario, and
// Monte-Carlo sweeps over the uncertainty level.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rwf/game.hpp"
#include "rwf/model.hpp"

namespace rwf {

enum class Regime { low_interference, high_interference };

/// Half-open interval (lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct ScenarioGeneratorSpec {
  Regime regime = Regime::low_interference;
  std::size_t num_users = 8;
  std::size_t num_channels = 64;
  std::uint64_t seed = 1;
  Interval direct_gain_range{0.0, 0.1};
  Interval cross_gain_range{0.0, 0.01};
  Interval noise_range{0.0, 0.01};
  /// Multiply every gain by an independent unit-mean exponential draw.
  bool fading = true;
  double p_max = 1.0;
  double p_mask = 1.0;

  /// Regime defaults: direct (0, 0.1], noise (0, 0.01], cross (0, 0.01] for
  /// low interference and (0, 1] for high interference.
  static ScenarioGeneratorSpec defaults(Regime regime, std::size_t num_users = 8,
                                        std::size_t num_channels = 64, std::uint64_t seed = 1);
};

/// Deterministic in the spec. Draw order from one mt19937_64 stream: gains
/// for j, i, k (j outer), then noise for i, k, then (if fading) one
/// exponential multiplier per gain in the same j, i, k order; a zero fading
/// draw on a direct gain is redrawn.
NetworkScenario generate_scenario(const ScenarioGeneratorSpec& spec);

/// Three users, six channels, budget 1 W, mask 0.5 W. Table rows h_ab are
/// read as the gain from transmitter a to receiver b.
NetworkScenario table1_scenario();

/// Published equilibrium allocations for the reference scenario: the nominal
/// game and the worst-case game at epsilon = 3.
PowerProfile table2_profile();
PowerProfile table3_profile();
inline constexpr std::array<double, 3> kTable2Utilities{1.92, 3.82, 10.9};
inline constexpr std::array<double, 3> kTable3Utilities{1.93, 3.95, 11.17};
inline constexpr double kTable3Epsilon = 3.0;

enum class SweepMode {
  /// Non-robust game under estimation error of half-width grid value.
  nominal_baseline,
  /// Worst-case robust game; estimation error half-width = grid value = epsilon.
  worst_case_sweep,
  /// Probabilistic robust game; grid is delta0, epsilon fixed.
  probabilistic_sweep,
  /// Exact interference known but inflated by (1 + epsilon); no estimation error.
  known_value_inflation,
};

enum class Evaluation { nominal, robust };

struct SweepSpec {
  SweepMode mode = SweepMode::worst_case_sweep;
  std::vector<double> grid;
  int realizations = 20;
  /// Epsilon used by probabilistic_sweep.
  double fixed_epsilon = 0.8;
  /// Column used as the headline utility in summaries.
  Evaluation evaluation = Evaluation::nominal;
};

struct RealizationRecord {
  int realization = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  bool converged = false;
  int iterations = 0;
  double social_utility_nominal = 0.0;
  double social_utility_robust = 0.0;
  double orthogonality = 0.0;
  bool uniqueness_holds = false;
  bool convergence_holds = false;
};

struct SweepRow {
  double grid_value = 0.0;
  double mean_social_utility_nominal_eval = 0.0;
  double mean_social_utility_robust_eval = 0.0;
  double convergence_rate = 0.0;
  double mean_orthogonality = 0.0;
  double uniqueness_rate = 0.0;
  double convergence_condition_rate = 0.0;
  int failures = 0;
  std::vector<RealizationRecord> records;

  double headline(Evaluation e) const {
    return e == Evaluation::nominal ? mean_social_utility_nominal_eval
                                    : mean_social_utility_robust_eval;
  }
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Seed of realization r: every grid point reuses the same channel draws
/// (and the same estimation-error draws), so rows differ only through the
/// uncertainty setting.
std::uint64_t realization_seed(std::uint64_t base_seed, int realization);

/// For each grid value and realization: generate the scenario, perturb the
/// interference estimate each user sees by a fixed relative error
/// e[i][k] = eps * u[i][k], u uniform on (-1, 1) (modes other than
/// known_value_inflation), solve the game on that estimate, and score the
/// reached profile on the true scenario. Realizations run on `jobs` threads
/// (0 = hardware concurrency); aggregation is in index order so results do
/// not depend on the thread count. Per-realization failures are recorded and
/// excluded from the means.
SweepResult run_sweep(const ScenarioGeneratorSpec& gen, const SweepSpec& sweep,
                      const IterationConfig& cfg, unsigned jobs = 0);

/// Header: grid_value, mean_social_utility_nominal_eval,
/// mean_social_utility_robust_eval, convergence_rate, mean_orthogonality,
/// uniqueness_rate, convergence_condition_rate
std::string to_csv(const SweepResult& result);
nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const ScenarioGeneratorSpec& spec);
nlohmann::json to_json(const SweepSpec& spec);

std::string to_string(Regime regime);
Regime parse_regime(const std::string& text);
std::string to_string(SweepMode mode);
SweepMode parse_sweep_mode(const std::string& text);
std::string to_string(Evaluation e);
Evaluation parse_evaluation(const std::string& text);

}  // namespace rwf
