// Scenario data, power profiles and uncertainty description for the
// multi-user power allocation game.
//
// Indexing convention used everywhere in the library:
//   users      i, j in [0, M)
//   channels   k    in [0, K)
//   gain(j, i, k)   power gain from transmitter j to receiver i on channel k
//
// All types are plain value types, immutable after construction apart from
// PowerProfile which is the mutable game state.
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace rwf {

/// Malformed or inconsistent input data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Probabilistic multiplier (1 - eps + 2 eps delta0) is not positive.
class DegenerateMultiplier : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine failed to reach its stated accuracy.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative slack allowed on the total budget constraint.
inline constexpr double kFeasibilityTol = 1e-9;

class NetworkScenario {
 public:
  /// `gain` is flat, laid out [j][i][k]; `noise` is [i][k].
  NetworkScenario(std::size_t num_users, std::size_t num_channels,
                  std::vector<double> gain, std::vector<double> noise,
                  std::vector<double> p_max, std::vector<double> p_mask);

  std::size_t num_users() const { return num_users_; }
  std::size_t num_channels() const { return num_channels_; }

  double gain(std::size_t from, std::size_t to, std::size_t k) const {
    return gain_[(from * num_users_ + to) * num_channels_ + k];
  }
  double noise(std::size_t user, std::size_t k) const {
    return noise_[user * num_channels_ + k];
  }
  double p_max(std::size_t user) const { return p_max_[user]; }
  double p_mask(std::size_t k) const { return p_mask_[k]; }

  std::span<const double> gains() const { return gain_; }
  std::span<const double> noises() const { return noise_; }
  std::span<const double> budgets() const { return p_max_; }
  std::span<const double> masks() const { return p_mask_; }

  bool operator==(const NetworkScenario&) const = default;

 private:
  std::size_t num_users_;
  std::size_t num_channels_;
  std::vector<double> gain_;
  std::vector<double> noise_;
  std::vector<double> p_max_;
  std::vector<double> p_mask_;
};

/// Transmit powers p[i][k] of every user on every channel.
class PowerProfile {
 public:
  PowerProfile() = default;
  PowerProfile(std::size_t num_users, std::size_t num_channels, double fill = 0.0)
      : num_users_(num_users), num_channels_(num_channels),
        p_(num_users * num_channels, fill) {}

  /// Builds from nested rows; all rows must have the same length.
  static PowerProfile from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t num_users() const { return num_users_; }
  std::size_t num_channels() const { return num_channels_; }

  double operator()(std::size_t user, std::size_t k) const {
    return p_[user * num_channels_ + k];
  }
  double& operator()(std::size_t user, std::size_t k) {
    return p_[user * num_channels_ + k];
  }

  std::span<const double> row(std::size_t user) const {
    return {p_.data() + user * num_channels_, num_channels_};
  }
  void set_row(std::size_t user, std::span<const double> values);

  std::span<const double> values() const { return p_; }
  std::vector<std::vector<double>> rows() const;

  bool operator==(const PowerProfile&) const = default;

 private:
  std::size_t num_users_ = 0;
  std::size_t num_channels_ = 0;
  std::vector<double> p_;
};

/// Largest absolute entrywise difference; dimensions must agree.
double sup_distance(const PowerProfile& a, const PowerProfile& b);

/// Throws InvalidInput unless the profile matches the scenario dimensions.
void require_dimensions(const NetworkScenario& scn, const PowerProfile& profile);

/// C1/C2 check: 0 <= p <= mask and sum_k p <= p_max (1 + kFeasibilityTol).
bool is_feasible(const NetworkScenario& scn, const PowerProfile& profile);

enum class RobustnessMode { nominal, worst_case, probabilistic };

/// Relative half-widths eps[i][k] of the symmetric error interval on the
/// normalized interference, plus the robustness mode.
class UncertaintySpec {
 public:
  /// Nominal game; epsilon is zero and the multiplier is exactly 1.
  UncertaintySpec() = default;

  static UncertaintySpec nominal() { return {}; }
  /// Same epsilon on every user and channel.
  static UncertaintySpec worst_case(double epsilon);
  static UncertaintySpec probabilistic(double epsilon, double delta0);
  /// Per-entry epsilon, laid out [i][k].
  static UncertaintySpec per_entry(RobustnessMode mode, std::size_t num_users,
                                   std::size_t num_channels,
                                   std::vector<double> epsilon,
                                   double delta0 = 0.5);

  RobustnessMode mode() const { return mode_; }
  double delta0() const { return delta0_; }
  double epsilon(std::size_t user, std::size_t k) const;
  bool is_per_entry() const { return !per_entry_.empty(); }
  /// Per-entry epsilon rows; empty for scalar specs.
  std::vector<std::vector<double>> epsilon_rows() const;
  bool fits(const NetworkScenario& scn) const;

  /// Factor applied to the nominal normalized interference. Exactly 1.0 in
  /// nominal mode; 1 + eps in worst-case mode; 1 + eps (2 delta0 - 1) in
  /// probabilistic mode (algebraically 1 - eps + 2 eps delta0, written so that
  /// delta0 = 1/2 and delta0 = 1 reproduce the nominal and worst-case factors
  /// bit for bit).
  double multiplier(std::size_t user, std::size_t k) const;

  /// |multiplier - 1|: the relative perturbation the game actually sees.
  double effective_epsilon(std::size_t user, std::size_t k) const;

 private:
  RobustnessMode mode_ = RobustnessMode::nominal;
  double scalar_epsilon_ = 0.0;
  double delta0_ = 0.5;
  std::size_t users_ = 0;
  std::size_t channels_ = 0;
  std::vector<double> per_entry_;
};

/// s[k] = (sum_{j != i} p[j][k] gain(j,i,k) + noise[i][k]) / gain(i,i,k).
std::vector<double> normalized_interference(const NetworkScenario& scn,
                                            const PowerProfile& profile,
                                            std::size_t user);

/// Applies the uncertainty multiplier of `user` channel by channel.
std::vector<double> effective_interference(std::span<const double> s_nominal,
                                           const UncertaintySpec& unc,
                                           std::size_t user);

/// Natural-log rate sum_k log(1 + p[i][k] / s_eff[k]).
double user_utility(const NetworkScenario& scn, const PowerProfile& profile,
                    std::size_t user, const UncertaintySpec& unc);

std::string to_string(RobustnessMode mode);
RobustnessMode parse_robustness_mode(const std::string& text);

// JSON scenario document: num_users, num_channels, gain [j][i][k],
// noise [i][k], p_max [i], p_mask [k].
nlohmann::json to_json(const NetworkScenario& scn);
NetworkScenario scenario_from_json(const nlohmann::json& doc);
/// Syntax errors are reported as "line L, column C: ...".
nlohmann::json parse_json_document(const std::string& text, const std::string& what);
NetworkScenario parse_scenario(const std::string& text);
NetworkScenario load_scenario(const std::string& path);

nlohmann::json to_json(const PowerProfile& profile);
PowerProfile profile_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const UncertaintySpec& unc);

}  // namespace rwf
