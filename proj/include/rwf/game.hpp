// Distributed best-response dynamics (iterative water-filling) for the
// nominal and the robust power allocation game.
#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rwf/model.hpp"

namespace rwf {

enum class Schedule { simultaneous, sequential };

enum class InitPreset { zeros, masks, uniform_budget, random };

struct InitSpec {
  InitPreset preset = InitPreset::zeros;
  std::uint64_t seed = 0;  // random preset only
};

struct IterationConfig {
  Schedule schedule = Schedule::sequential;
  /// Rounds; a sequential round is one sweep over all M users.
  int max_iters = 500;
  /// Sup-norm threshold on the profile change over one round.
  double conv_tol = 1e-8;
  std::variant<InitSpec, PowerProfile> initial = InitSpec{};
};

struct EquilibriumReport {
  PowerProfile profile;
  bool converged = false;
  /// Rounds performed.
  int iterations = 0;
  /// Single-user best-response updates performed (M per round).
  long steps = 0;
  /// Sup-norm change of the profile over each round.
  std::vector<double> residual_trace;
  /// Per-user utility at the final profile under the run's uncertainty.
  std::vector<double> utilities;
  double social_utility = 0.0;
};

/// Materializes an initial profile. Presets:
///   zeros           all powers 0
///   masks           p = p_mask, scaled per user into the budget if needed
///   uniform_budget  p = min(p_mask, p_max / K)
///   random          uniform fractions of the mask, scaled into the budget
PowerProfile make_initial_profile(const NetworkScenario& scn,
                                  const std::variant<InitSpec, PowerProfile>& initial);

/// Called with the profile after every single-user or simultaneous update.
using IterateObserver = std::function<void(const PowerProfile&)>;

/// Runs simultaneous or sequential best-response dynamics until the change
/// over one round is at most cfg.conv_tol or cfg.max_iters rounds have run.
/// In the sequential schedule users update in index order 0..M-1 within a
/// round, each against the latest powers of the others.
EquilibriumReport run_iwfa(const NetworkScenario& scn, const UncertaintySpec& unc,
                           const IterationConfig& cfg, const IterateObserver& observer = {});

/// Fixed-point test: every user's best response to the others reproduces its
/// own row to within `tol` in sup-norm.
bool is_equilibrium(const NetworkScenario& scn, const UncertaintySpec& unc,
                    const PowerProfile& profile, double tol);

/// Largest best-response deviation over all users (0 at a fixed point).
double equilibrium_gap(const NetworkScenario& scn, const UncertaintySpec& unc,
                       const PowerProfile& profile);

std::string to_string(Schedule schedule);
Schedule parse_schedule(const std::string& text);
std::string to_string(InitPreset preset);
InitPreset parse_init_preset(const std::string& text);

nlohmann::json to_json(const EquilibriumReport& report);
nlohmann::json to_json(const IterationConfig& cfg);

}  // namespace rwf
