#include "rwf/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "rwf/analysis.hpp"

namespace rwf {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

// (lo, hi]
double draw(std::mt19937_64& rng, const Interval& in) {
  return in.lo + (in.hi - in.lo) * (1.0 - unit_uniform(rng));
}

double unit_exponential(std::mt19937_64& rng) { return -std::log1p(-unit_uniform(rng)); }

void validate(const Interval& in, const char* name) {
  if (!(in.lo >= 0.0) || !(in.hi > in.lo) || !std::isfinite(in.hi))
    throw InvalidInput(std::string(name) + " must satisfy 0 <= lo < hi");
}

}  // namespace

ScenarioGeneratorSpec ScenarioGeneratorSpec::defaults(Regime regime, std::size_t num_users,
                                                      std::size_t num_channels,
                                                      std::uint64_t seed) {
  ScenarioGeneratorSpec s;
  s.regime = regime;
  s.num_users = num_users;
  s.num_channels = num_channels;
  s.seed = seed;
  s.cross_gain_range =
      regime == Regime::low_interference ? Interval{0.0, 0.01} : Interval{0.0, 1.0};
  return s;
}

NetworkScenario generate_scenario(const ScenarioGeneratorSpec& spec) {
  validate(spec.direct_gain_range, "direct_gain_range");
  validate(spec.cross_gain_range, "cross_gain_range");
  validate(spec.noise_range, "noise_range");
  const std::size_t m = spec.num_users;
  const std::size_t kk = spec.num_channels;
  if (m == 0 || kk == 0) throw InvalidInput("generator needs users and channels");

  std::mt19937_64 rng(spec.seed);
  std::vector<double> gain(m * m * kk);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < kk; ++k)
        gain[(j * m + i) * kk + k] =
            draw(rng, i == j ? spec.direct_gain_range : spec.cross_gain_range);
  std::vector<double> noise(m * kk);
  for (double& n : noise) n = draw(rng, spec.noise_range);
  if (spec.fading) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < kk; ++k) {
          double f = unit_exponential(rng);
          while (i == j && !(f > 0.0)) f = unit_exponential(rng);
          gain[(j * m + i) * kk + k] *= f;
        }
  }
  return NetworkScenario(m, kk, std::move(gain), std::move(noise),
                         std::vector<double>(m, spec.p_max),
                         std::vector<double>(kk, spec.p_mask));
}

NetworkScenario table1_scenario() {
  // rows h_ab (transmitter a -> receiver b), channels 1..6
  const double h[3][3][6] = {
      {{20.52, 2.0, 2.08, 10.56, 0.44, 1.6},
       {4.91, 4.97, 3.95, 3.94, 2.95, 5.95},
       {7.9, 5.97, 2.97, 4.92, 1.93, 6.94}},
      {{0.92, 0.94, 0.95, 0.92, 0.95, 0.99},
       {2.44, 26.32, 23.2, 3.64, 3.92, 0.68},
       {0.91, 0.96, 0.99, 0.99, 0.934, 0.95}},
      {{0.91, 0.95, 0.98, 0.98, 0.93, 0.96},
       {0.93, 0.96, 0.90, 0.96, 0.98, 0.97},
       {3.6, 24, 6, 1.6, 34, 40}},
  };
  const double sigma[3][6] = {
      {2.2, 0.26, 4.1, 3.06, 0.02, 0.02},
      {8.24, 0.08, 0.18, 0.08, 0.04, 0.06},
      {0.22, 0.26, 4.08, 1.06, 0.02, 0.02},
  };
  std::vector<double> gain;
  for (const auto& from : h)
    for (const auto& to : from) gain.insert(gain.end(), std::begin(to), std::end(to));
  std::vector<double> noise;
  for (const auto& row : sigma) noise.insert(noise.end(), std::begin(row), std::end(row));
  return NetworkScenario(3, 6, std::move(gain), std::move(noise), {1.0, 1.0, 1.0},
                         std::vector<double>(6, 0.5));
}

PowerProfile table2_profile() {
  return PowerProfile::from_rows({{0.44, 0.1, 0.0, 0.45, 0.0, 0.0},
                                  {0.0, 0.5, 0.5, 0.0, 0.0, 0.0},
                                  {0.0, 0.0059, 0.3049, 0.0, 0.32, 0.37}});
}

PowerProfile table3_profile() {
  return PowerProfile::from_rows({{0.5, 0.0, 0.0, 0.5, 0.0, 0.0},
                                  {0.0, 0.5, 0.5, 0.0, 0.0, 0.0},
                                  {0.0, 0.0, 0.0, 0.0, 0.5, 0.5}});
}

std::uint64_t realization_seed(std::uint64_t base_seed, int realization) {
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed),
                    static_cast<std::uint32_t>(base_seed >> 32),
                    static_cast<std::uint32_t>(realization)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

struct Setting {
  UncertaintySpec solve;
  double error_width = 0.0;
};

Setting setting_for(const SweepSpec& sweep, double grid_value) {
  switch (sweep.mode) {
    case SweepMode::nominal_baseline:
      return {UncertaintySpec::nominal(), grid_value};
    case SweepMode::worst_case_sweep:
      return {UncertaintySpec::worst_case(grid_value), grid_value};
    case SweepMode::probabilistic_sweep:
      return {UncertaintySpec::probabilistic(sweep.fixed_epsilon, grid_value),
              sweep.fixed_epsilon};
    case SweepMode::known_value_inflation:
      return {UncertaintySpec::worst_case(grid_value), 0.0};
  }
  return {};
}

// Scenario as seen by the users: s_est = s_true (1 + e) is realized by
// dividing each direct gain by (1 + e).
NetworkScenario estimated_scenario(const NetworkScenario& truth, double width,
                                   std::uint64_t seed) {
  if (width == 0.0) return truth;
  const std::size_t m = truth.num_users();
  const std::size_t kk = truth.num_channels();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<double> gain(truth.gains().begin(), truth.gains().end());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < kk; ++k) {
      double factor = 0.0;
      while (!(factor > 0.0)) factor = 1.0 + width * (2.0 * unit_uniform(rng) - 1.0);
      gain[(i * m + i) * kk + k] /= factor;
    }
  auto noise = truth.noises();
  auto budgets = truth.budgets();
  auto masks = truth.masks();
  return NetworkScenario(m, kk, std::move(gain), {noise.begin(), noise.end()},
                         {budgets.begin(), budgets.end()}, {masks.begin(), masks.end()});
}

RealizationRecord run_realization(const ScenarioGeneratorSpec& gen, const SweepSpec& sweep,
                                  const IterationConfig& cfg, double grid_value, int r) {
  RealizationRecord rec;
  rec.realization = r;
  rec.seed = realization_seed(gen.seed, r);
  try {
    ScenarioGeneratorSpec spec = gen;
    spec.seed = rec.seed;
    const NetworkScenario truth = generate_scenario(spec);
    const Setting setting = setting_for(sweep, grid_value);
    const NetworkScenario seen = estimated_scenario(truth, setting.error_width, rec.seed);

    const EquilibriumReport report = run_iwfa(seen, setting.solve, cfg);
    const ConditionReport cond = check_conditions(seen, setting.solve);
    rec.converged = report.converged;
    rec.iterations = report.iterations;
    rec.social_utility_nominal = social_utility(truth, report.profile, UncertaintySpec::nominal());
    rec.social_utility_robust = social_utility(truth, report.profile, setting.solve);
    rec.orthogonality = orthogonality_index(report.profile);
    rec.uniqueness_holds = cond.uniqueness_holds;
    rec.convergence_holds = cond.convergence_holds;
    rec.ok = true;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

SweepResult run_sweep(const ScenarioGeneratorSpec& gen, const SweepSpec& sweep,
                      const IterationConfig& cfg, unsigned jobs) {
  if (sweep.grid.empty()) throw InvalidInput("sweep grid is empty");
  if (sweep.realizations < 1) throw InvalidInput("sweep needs at least one realization");
  if (sweep.mode == SweepMode::probabilistic_sweep && !(sweep.fixed_epsilon >= 0.0))
    throw InvalidInput("fixed_epsilon must be >= 0");
  // Fail early on a bad grid value rather than once per realization.
  for (double g : sweep.grid) {
    const Setting setting = setting_for(sweep, g);
    if (!(setting.solve.multiplier(0, 0) > 0.0))
      throw DegenerateMultiplier("grid value " + std::to_string(g) +
                                 " gives a non-positive interference multiplier");
  }

  const std::size_t rows = sweep.grid.size();
  const std::size_t per_row = static_cast<std::size_t>(sweep.realizations);
  const std::size_t tasks = rows * per_row;
  std::vector<RealizationRecord> records(tasks);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++)
      records[t] = run_realization(gen, sweep, cfg, sweep.grid[t / per_row],
                                   static_cast<int>(t % per_row));
  };
  std::vector<std::thread> pool;
  for (unsigned n = 1; n < jobs; ++n) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult result;
  for (std::size_t row = 0; row < rows; ++row) {
    SweepRow out;
    out.grid_value = sweep.grid[row];
    out.records.assign(records.begin() + static_cast<std::ptrdiff_t>(row * per_row),
                       records.begin() + static_cast<std::ptrdiff_t>((row + 1) * per_row));
    std::size_t ok = 0;
    for (const auto& rec : out.records) {
      if (!rec.ok) {
        ++out.failures;
        continue;
      }
      ++ok;
      out.mean_social_utility_nominal_eval += rec.social_utility_nominal;
      out.mean_social_utility_robust_eval += rec.social_utility_robust;
      out.convergence_rate += rec.converged ? 1.0 : 0.0;
      out.mean_orthogonality += rec.orthogonality;
      out.uniqueness_rate += rec.uniqueness_holds ? 1.0 : 0.0;
      out.convergence_condition_rate += rec.convergence_holds ? 1.0 : 0.0;
    }
    if (ok > 0) {
      const double n = static_cast<double>(ok);
      out.mean_social_utility_nominal_eval /= n;
      out.mean_social_utility_robust_eval /= n;
      out.convergence_rate /= n;
      out.mean_orthogonality /= n;
      out.uniqueness_rate /= n;
      out.convergence_condition_rate /= n;
    }
    result.rows.push_back(std::move(out));
  }
  return result;
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "grid_value,mean_social_utility_nominal_eval,mean_social_utility_robust_eval,"
        "convergence_rate,mean_orthogonality,uniqueness_rate,convergence_condition_rate\n";
  for (const auto& row : result.rows)
    os << row.grid_value << ',' << row.mean_social_utility_nominal_eval << ','
       << row.mean_social_utility_robust_eval << ',' << row.convergence_rate << ','
       << row.mean_orthogonality << ',' << row.uniqueness_rate << ','
       << row.convergence_condition_rate << '\n';
  return os.str();
}

nlohmann::json to_json(const SweepResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : row.records) {
      nlohmann::json j{{"realization", r.realization},
                       {"seed", r.seed},
                       {"ok", r.ok},
                       {"converged", r.converged},
                       {"iterations", r.iterations},
                       {"social_utility_nominal", r.social_utility_nominal},
                       {"social_utility_robust", r.social_utility_robust},
                       {"orthogonality", r.orthogonality},
                       {"uniqueness_holds", r.uniqueness_holds},
                       {"convergence_holds", r.convergence_holds}};
      if (!r.ok) j["error"] = r.error;
      recs.push_back(std::move(j));
    }
    rows.push_back({{"grid_value", row.grid_value},
                    {"mean_social_utility_nominal_eval", row.mean_social_utility_nominal_eval},
                    {"mean_social_utility_robust_eval", row.mean_social_utility_robust_eval},
                    {"convergence_rate", row.convergence_rate},
                    {"mean_orthogonality", row.mean_orthogonality},
                    {"uniqueness_rate", row.uniqueness_rate},
                    {"convergence_condition_rate", row.convergence_condition_rate},
                    {"failures", row.failures},
                    {"realizations", std::move(recs)}});
  }
  return {{"rows", std::move(rows)}};
}

nlohmann::json to_json(const ScenarioGeneratorSpec& spec) {
  auto iv = [](const Interval& in) { return nlohmann::json::array({in.lo, in.hi}); };
  return {{"regime", to_string(spec.regime)},
          {"num_users", spec.num_users},
          {"num_channels", spec.num_channels},
          {"seed", spec.seed},
          {"direct_gain_range", iv(spec.direct_gain_range)},
          {"cross_gain_range", iv(spec.cross_gain_range)},
          {"noise_range", iv(spec.noise_range)},
          {"fading", spec.fading},
          {"p_max", spec.p_max},
          {"p_mask", spec.p_mask}};
}

nlohmann::json to_json(const SweepSpec& spec) {
  return {{"mode", to_string(spec.mode)},
          {"grid", spec.grid},
          {"realizations", spec.realizations},
          {"fixed_epsilon", spec.fixed_epsilon},
          {"evaluation", to_string(spec.evaluation)}};
}

std::string to_string(Regime regime) {
  return regime == Regime::low_interference ? "low_interference" : "high_interference";
}

Regime parse_regime(const std::string& text) {
  if (text == "low" || text == "low_interference") return Regime::low_interference;
  if (text == "high" || text == "high_interference") return Regime::high_interference;
  throw InvalidInput("unknown regime '" + text + "'");
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::nominal_baseline: return "nominal_baseline";
    case SweepMode::worst_case_sweep: return "worst_case_sweep";
    case SweepMode::probabilistic_sweep: return "probabilistic_sweep";
    case SweepMode::known_value_inflation: return "known_value_inflation";
  }
  return "worst_case_sweep";
}

SweepMode parse_sweep_mode(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "nominal_baseline" || t == "nominal") return SweepMode::nominal_baseline;
  if (t == "worst_case_sweep" || t == "worst_case") return SweepMode::worst_case_sweep;
  if (t == "probabilistic_sweep" || t == "probabilistic") return SweepMode::probabilistic_sweep;
  if (t == "known_value_inflation" || t == "known_value") return SweepMode::known_value_inflation;
  throw InvalidInput("unknown sweep mode '" + text + "'");
}

std::string to_string(Evaluation e) { return e == Evaluation::nominal ? "nominal" : "robust"; }

Evaluation parse_evaluation(const std::string& text) {
  if (text == "nominal") return Evaluation::nominal;
  if (text == "robust") return Evaluation::robust;
  throw InvalidInput("unknown evaluation '" + text + "'");
}

}  // namespace rwf
