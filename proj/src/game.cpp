#include "rwf/game.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rwf/waterfill.hpp"

namespace rwf {

namespace {

void scale_into_budget(const NetworkScenario& scn, PowerProfile& p) {
  for (std::size_t i = 0; i < scn.num_users(); ++i) {
    double total = 0.0;
    for (std::size_t k = 0; k < scn.num_channels(); ++k) total += p(i, k);
    if (total > scn.p_max(i)) {
      const double f = scn.p_max(i) / total;
      for (std::size_t k = 0; k < scn.num_channels(); ++k) p(i, k) *= f;
    }
  }
}

std::vector<double> respond(const NetworkScenario& scn, const UncertaintySpec& unc,
                            const PowerProfile& profile, std::size_t user) {
  const auto s = effective_interference(normalized_interference(scn, profile, user), unc, user);
  return best_response(s, scn.p_max(user), scn.masks()).power;
}

}  // namespace

PowerProfile make_initial_profile(const NetworkScenario& scn,
                                  const std::variant<InitSpec, PowerProfile>& initial) {
  if (const auto* given = std::get_if<PowerProfile>(&initial)) {
    require_dimensions(scn, *given);
    if (!is_feasible(scn, *given)) throw InvalidInput("initial profile is infeasible");
    return *given;
  }
  const auto& spec = std::get<InitSpec>(initial);
  const std::size_t m = scn.num_users();
  const std::size_t kk = scn.num_channels();
  PowerProfile p(m, kk);
  switch (spec.preset) {
    case InitPreset::zeros:
      break;
    case InitPreset::masks:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < kk; ++k) p(i, k) = scn.p_mask(k);
      scale_into_budget(scn, p);
      break;
    case InitPreset::uniform_budget:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < kk; ++k)
          p(i, k) = std::min(scn.p_mask(k), scn.p_max(i) / static_cast<double>(kk));
      break;
    case InitPreset::random: {
      std::mt19937_64 rng(spec.seed);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < kk; ++k)
          p(i, k) = scn.p_mask(k) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
      scale_into_budget(scn, p);
      break;
    }
  }
  return p;
}

EquilibriumReport run_iwfa(const NetworkScenario& scn, const UncertaintySpec& unc,
                           const IterationConfig& cfg, const IterateObserver& observer) {
  if (cfg.max_iters < 1) throw InvalidInput("max_iters must be at least 1");
  if (!(cfg.conv_tol > 0.0)) throw InvalidInput("conv_tol must be positive");
  if (!unc.fits(scn)) throw InvalidInput("uncertainty dimensions do not match scenario");

  const std::size_t m = scn.num_users();
  EquilibriumReport report;
  report.profile = make_initial_profile(scn, cfg.initial);
  PowerProfile& p = report.profile;

  for (int round = 0; round < cfg.max_iters; ++round) {
    const PowerProfile before = p;
    if (cfg.schedule == Schedule::simultaneous) {
      for (std::size_t i = 0; i < m; ++i) p.set_row(i, respond(scn, unc, before, i));
      report.steps += static_cast<long>(m);
      if (observer) observer(p);
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        p.set_row(i, respond(scn, unc, p, i));
        ++report.steps;
        if (observer) observer(p);
      }
    }
    report.iterations = round + 1;
    const double change = sup_distance(before, p);
    report.residual_trace.push_back(change);
    if (change <= cfg.conv_tol) {
      report.converged = true;
      break;
    }
  }

  report.utilities.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    report.utilities[i] = user_utility(scn, p, i, unc);
    report.social_utility += report.utilities[i];
  }
  return report;
}

double equilibrium_gap(const NetworkScenario& scn, const UncertaintySpec& unc,
                       const PowerProfile& profile) {
  require_dimensions(scn, profile);
  double gap = 0.0;
  for (std::size_t i = 0; i < scn.num_users(); ++i) {
    const auto br = respond(scn, unc, profile, i);
    const auto row = profile.row(i);
    for (std::size_t k = 0; k < br.size(); ++k) gap = std::max(gap, std::abs(br[k] - row[k]));
  }
  return gap;
}

bool is_equilibrium(const NetworkScenario& scn, const UncertaintySpec& unc,
                    const PowerProfile& profile, double tol) {
  return equilibrium_gap(scn, unc, profile) <= tol;
}

std::string to_string(Schedule schedule) {
  return schedule == Schedule::simultaneous ? "simultaneous" : "sequential";
}

Schedule parse_schedule(const std::string& text) {
  if (text == "simultaneous") return Schedule::simultaneous;
  if (text == "sequential") return Schedule::sequential;
  throw InvalidInput("unknown schedule '" + text + "'");
}

std::string to_string(InitPreset preset) {
  switch (preset) {
    case InitPreset::zeros: return "zeros";
    case InitPreset::masks: return "masks";
    case InitPreset::uniform_budget: return "uniform_budget";
    case InitPreset::random: return "random";
  }
  return "zeros";
}

InitPreset parse_init_preset(const std::string& text) {
  if (text == "zeros") return InitPreset::zeros;
  if (text == "masks") return InitPreset::masks;
  if (text == "uniform_budget" || text == "uniform-budget" || text == "uniform")
    return InitPreset::uniform_budget;
  if (text == "random") return InitPreset::random;
  throw InvalidInput("unknown initial profile '" + text + "'");
}

nlohmann::json to_json(const EquilibriumReport& report) {
  return {{"profile", to_json(report.profile)},
          {"converged", report.converged},
          {"iterations", report.iterations},
          {"steps", report.steps},
          {"residual_trace", report.residual_trace},
          {"utilities", report.utilities},
          {"social_utility", report.social_utility}};
}

nlohmann::json to_json(const IterationConfig& cfg) {
  nlohmann::json out{{"schedule", to_string(cfg.schedule)},
                     {"max_iters", cfg.max_iters},
                     {"conv_tol", cfg.conv_tol}};
  if (const auto* spec = std::get_if<InitSpec>(&cfg.initial)) {
    out["init"] = to_string(spec->preset);
    if (spec->preset == InitPreset::random) out["init_seed"] = spec->seed;
  } else {
    out["init"] = "explicit";
    out["initial_profile"] = to_json(std::get<PowerProfile>(cfg.initial));
  }
  return out;
}

}  // namespace rwf
