#include "rwf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "rwf/analysis.hpp"
#include "rwf/experiments.hpp"
#include "rwf/game.hpp"
#include "rwf/model.hpp"

namespace rwf::cli {

namespace {

constexpr const char* kToolName = "rwf";
constexpr const char* kToolVersion = "1.0.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

std::string with_metadata_csv(const nlohmann::json& meta, const std::string& body) {
  std::string text;
  for (const auto& [key, value] : meta.items())
    text += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  return text + body;
}

NetworkScenario scenario_for(const CliInvocation& inv) {
  const bool have_file = !inv.scenario.empty();
  const bool have_gen = !inv.generate.empty();
  if (have_file == have_gen)
    throw InvalidInput("give exactly one of --scenario or --generate");
  if (have_file) return inv.scenario == "table1" ? table1_scenario() : load_scenario(inv.scenario);
  ScenarioGeneratorSpec gen =
      ScenarioGeneratorSpec::defaults(parse_regime(inv.generate), inv.users, inv.channels, inv.seed);
  gen.fading = !inv.no_fading;
  return generate_scenario(gen);
}

UncertaintySpec uncertainty_for(const CliInvocation& inv) {
  switch (parse_robustness_mode(inv.mode)) {
    case RobustnessMode::nominal:
      return UncertaintySpec::nominal();
    case RobustnessMode::worst_case:
      return UncertaintySpec::worst_case(inv.epsilon);
    case RobustnessMode::probabilistic:
      return UncertaintySpec::probabilistic(inv.epsilon, inv.delta0);
  }
  throw InvalidInput("unknown robustness mode");
}

IterationConfig config_for(const CliInvocation& inv) {
  if (!(inv.tol > 0.0)) throw InvalidInput("--tol must be positive");
  if (inv.max_iters < 1) throw InvalidInput("--max-iters must be at least 1");
  IterationConfig cfg;
  cfg.schedule = parse_schedule(inv.schedule);
  cfg.max_iters = inv.max_iters;
  cfg.conv_tol = inv.tol;
  cfg.initial = InitSpec{parse_init_preset(inv.init), inv.seed};
  return cfg;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidInput("--grid: '" + item + "' is not a number");
    grid.push_back(v);
  }
  if (grid.empty()) throw InvalidInput("--grid is empty");
  return grid;
}

void require_format(const CliInvocation& inv, bool csv_allowed) {
  if (inv.format == "json") return;
  if (inv.format == "csv" && csv_allowed) return;
  throw InvalidInput("unsupported --format '" + inv.format + "'");
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// reproduce pipelines

IterationConfig reference_config() { return IterationConfig{}; }

std::set<std::size_t> support(const PowerProfile& p, std::size_t user, double tol = kActivityTol) {
  std::set<std::size_t> s;
  for (std::size_t k = 0; k < p.num_channels(); ++k)
    if (p(user, k) > tol) s.insert(k);
  return s;
}

bool same_supports(const PowerProfile& a, const PowerProfile& b) {
  for (std::size_t i = 0; i < a.num_users(); ++i)
    if (support(a, i) != support(b, i)) return false;
  return true;
}

nlohmann::json table_artifact(const NetworkScenario& scn, const UncertaintySpec& unc,
                              const EquilibriumReport& rep, const PowerProfile& published,
                              const std::array<double, 3>& published_utilities) {
  const auto nominal = UncertaintySpec::nominal();
  std::vector<double> nominal_utilities;
  for (std::size_t i = 0; i < scn.num_users(); ++i)
    nominal_utilities.push_back(user_utility(scn, rep.profile, i, nominal));
  return {{"uncertainty", to_json(unc)},
          {"report", to_json(rep)},
          {"utilities_nominal_eval", nominal_utilities},
          {"social_utility_nominal_eval", social_utility(scn, rep.profile, nominal)},
          {"orthogonality", orthogonality_index(rep.profile)},
          {"conditions", to_json(check_conditions(scn, unc))},
          {"published_profile", to_json(published)},
          {"published_utilities", published_utilities},
          {"published_profile_social_utility_nominal_eval",
           social_utility(scn, published, nominal)},
          {"published_profile_equilibrium_gap", equilibrium_gap(scn, unc, published)}};
}

Check utilities_check(const std::string& name, const NetworkScenario& scn,
                      const PowerProfile& profile, const std::array<double, 3>& expected,
                      double tol) {
  Check c{name, true, ""};
  for (std::size_t i = 0; i < scn.num_users(); ++i) {
    const double u = user_utility(scn, profile, i, UncertaintySpec::nominal());
    c.detail += (i ? ", " : "") + fmt(u) + " vs " + fmt(expected[i]);
    if (!(std::abs(u - expected[i]) <= tol)) c.pass = false;
  }
  return c;
}

Reproduction reproduce_table3() {
  const auto scn = table1_scenario();
  const auto unc = UncertaintySpec::worst_case(kTable3Epsilon);
  const auto rep = run_iwfa(scn, unc, reference_config());
  Reproduction out;
  out.artifacts.emplace_back(
      "table3.json",
      table_artifact(scn, unc, rep, table3_profile(), kTable3Utilities).dump(2) + "\n");
  out.checks.push_back({"robust equilibrium converged", rep.converged,
                        std::to_string(rep.iterations) + " rounds"});
  const double orth = orthogonality_index(rep.profile);
  out.checks.push_back({"robust equilibrium orthogonal", orth == 1.0, "index " + fmt(orth)});
  out.checks.push_back({"supports match published allocation",
                        same_supports(rep.profile, table3_profile()), ""});
  out.checks.push_back(
      utilities_check("utilities within 0.05 of published", scn, rep.profile, kTable3Utilities, 0.05));
  return out;
}

Reproduction reproduce_table2() {
  const auto scn = table1_scenario();
  const auto nominal = UncertaintySpec::nominal();
  const auto ne = run_iwfa(scn, nominal, reference_config());
  const auto rne = run_iwfa(scn, UncertaintySpec::worst_case(kTable3Epsilon), reference_config());
  Reproduction out;
  auto doc = table_artifact(scn, nominal, ne, table2_profile(), kTable2Utilities);
  const double ne_social = social_utility(scn, ne.profile, nominal);
  const double rne_social = social_utility(scn, rne.profile, nominal);
  doc["robust_equilibrium_social_utility_nominal_eval"] = rne_social;
  out.artifacts.emplace_back("table2.json", doc.dump(2) + "\n");
  out.checks.push_back({"nominal equilibrium converged", ne.converged,
                        std::to_string(ne.iterations) + " rounds"});
  out.checks.push_back({"nominal equilibrium is a fixed point",
                        is_equilibrium(scn, nominal, ne.profile, 1e-6), ""});
  out.checks.push_back({"nominal social utility <= robust + 0.5", ne_social <= rne_social + 0.5,
                        fmt(ne_social) + " vs " + fmt(rne_social)});
  if (same_supports(ne.profile, table2_profile()))
    out.checks.push_back(utilities_check("utilities within 0.05 of published", scn, ne.profile,
                                         kTable2Utilities, 0.05));
  return out;
}

SweepResult sweep_of(Regime regime, SweepMode mode, std::vector<double> grid, unsigned jobs,
                     Evaluation evaluation = Evaluation::nominal) {
  SweepSpec sweep;
  sweep.mode = mode;
  sweep.grid = std::move(grid);
  sweep.evaluation = evaluation;
  return run_sweep(ScenarioGeneratorSpec::defaults(regime), sweep, reference_config(), jobs);
}

const std::vector<double> kFig1Grid{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
const std::vector<double> kFig2Grid{0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 2.0, 3.0};
const std::vector<double> kDeltaGrid{0.0, 0.25, 0.5, 0.75, 1.0};

bool rows_identical(const SweepRow& a, const SweepRow& b) {
  return a.mean_social_utility_nominal_eval == b.mean_social_utility_nominal_eval &&
         a.mean_social_utility_robust_eval == b.mean_social_utility_robust_eval &&
         a.convergence_rate == b.convergence_rate &&
         a.mean_orthogonality == b.mean_orthogonality && a.uniqueness_rate == b.uniqueness_rate &&
         a.convergence_condition_rate == b.convergence_condition_rate;
}

Check non_increasing(const std::string& name, const SweepResult& r, Evaluation e) {
  const double slack = 0.01 * std::abs(r.rows.front().headline(e));
  Check c{name, true, ""};
  for (std::size_t n = 0; n < r.rows.size(); ++n) {
    c.detail += (n ? " " : "") + fmt(r.rows[n].headline(e));
    if (n > 0 && r.rows[n].headline(e) > r.rows[n - 1].headline(e) + slack) c.pass = false;
  }
  return c;
}

Reproduction reproduce_fig1(unsigned jobs) {
  const auto wc = sweep_of(Regime::low_interference, SweepMode::worst_case_sweep, kFig1Grid, jobs);
  const auto kv =
      sweep_of(Regime::low_interference, SweepMode::known_value_inflation, kFig1Grid, jobs);
  Reproduction out;
  out.artifacts.emplace_back("fig1_worst_case.csv", to_csv(wc));
  out.artifacts.emplace_back("fig1_known_value.csv", to_csv(kv));
  out.checks.push_back(non_increasing("worst-case utility non-increasing in epsilon", wc,
                                      Evaluation::nominal));
  Check loss{"known-value loss <= worst-case loss", true, ""};
  for (std::size_t n = 0; n < wc.rows.size(); ++n) {
    const double l_wc = wc.rows[0].mean_social_utility_nominal_eval -
                        wc.rows[n].mean_social_utility_nominal_eval;
    const double l_kv = kv.rows[0].mean_social_utility_nominal_eval -
                        kv.rows[n].mean_social_utility_nominal_eval;
    if (l_kv > l_wc + 1e-9) loss.pass = false;
  }
  out.checks.push_back(loss);
  return out;
}

Reproduction reproduce_fig2(unsigned jobs) {
  const auto wc = sweep_of(Regime::high_interference, SweepMode::worst_case_sweep, kFig2Grid, jobs);
  const auto kv =
      sweep_of(Regime::high_interference, SweepMode::known_value_inflation, kFig2Grid, jobs);
  Reproduction out;
  out.artifacts.emplace_back("fig2_worst_case.csv", to_csv(wc));
  out.artifacts.emplace_back("fig2_known_value.csv", to_csv(kv));
  Check orth{"orthogonality at epsilon 1, 2, 3 >= epsilon 0", true, ""};
  Check gain{"some epsilon > 0 beats epsilon 0 in social utility", false, ""};
  const SweepRow& base = wc.rows.front();
  for (const auto& row : wc.rows) {
    if (row.grid_value >= 1.0 && row.mean_orthogonality < base.mean_orthogonality)
      orth.pass = false;
    if (row.grid_value > 0.0 &&
        row.mean_social_utility_nominal_eval > base.mean_social_utility_nominal_eval)
      gain.pass = true;
    orth.detail += (orth.detail.empty() ? "" : " ") + fmt(row.mean_orthogonality);
    gain.detail += (gain.detail.empty() ? "" : " ") + fmt(row.mean_social_utility_nominal_eval);
  }
  out.checks.push_back(orth);
  out.checks.push_back(gain);
  return out;
}

Reproduction reproduce_delta(Regime regime, const std::string& stem, unsigned jobs) {
  const double eps = SweepSpec{}.fixed_epsilon;
  const auto pr =
      sweep_of(regime, SweepMode::probabilistic_sweep, kDeltaGrid, jobs, Evaluation::robust);
  const auto nom = sweep_of(regime, SweepMode::nominal_baseline, {eps}, jobs);
  const auto wc = sweep_of(regime, SweepMode::worst_case_sweep, {eps}, jobs);
  Reproduction out;
  out.artifacts.emplace_back(stem + "_probabilistic.csv", to_csv(pr));
  out.artifacts.emplace_back(stem + "_nominal.csv", to_csv(nom));
  out.artifacts.emplace_back(stem + "_worst_case.csv", to_csv(wc));
  out.checks.push_back(
      {"delta0 = 0.5 row equals nominal row", rows_identical(pr.rows[2], nom.rows[0]), ""});
  out.checks.push_back(
      {"delta0 = 1 row equals worst-case row", rows_identical(pr.rows[4], wc.rows[0]), ""});
  if (regime == Regime::low_interference)
    out.checks.push_back(non_increasing("guaranteed utility non-increasing in delta0", pr,
                                        Evaluation::robust));
  return out;
}

int finish(const Reproduction& rep, const CliInvocation& inv, std::ostream& out) {
  std::filesystem::create_directories(inv.out_dir);
  for (const auto& [name, text] : rep.artifacts) {
    std::string body = text;
    if (name.size() > 4 && name.substr(name.size() - 4) == ".csv")
      body = with_metadata_csv(metadata(inv), text);
    write_text((std::filesystem::path(inv.out_dir) / name).string(), body, out);
  }
  bool all = true;
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
    all = all && c.pass;
  }
  return all ? kExitOk : kExitNumerical;
}

}  // namespace

nlohmann::json metadata(const CliInvocation& inv) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"subcommand", inv.subcommand},
          {"scenario", inv.scenario},
          {"generate", inv.generate},
          {"users", inv.users},
          {"channels", inv.channels},
          {"seed", inv.seed},
          {"fading", !inv.no_fading},
          {"mode", inv.mode},
          {"epsilon", inv.epsilon},
          {"delta0", inv.delta0},
          {"schedule", inv.schedule},
          {"tol", inv.tol},
          {"max_iters", inv.max_iters},
          {"init", inv.init},
          {"profile", inv.profile},
          {"equilibrium", inv.equilibrium},
          {"eq_tol", inv.eq_tol},
          {"regime", inv.regime},
          {"sweep_mode", inv.sweep_mode},
          {"grid", inv.grid},
          {"realizations", inv.realizations},
          {"fixed_epsilon", inv.fixed_epsilon},
          {"evaluation", inv.evaluation},
          {"jobs", inv.jobs},
          {"target", inv.target},
          {"out_dir", inv.out_dir},
          {"format", inv.format},
          {"activity_tol", kActivityTol},
          {"power_iter_tol", kPowerIterTol},
          {"power_iter_max", kPowerIterMax}};
}

int cmd_solve(const CliInvocation& inv, std::ostream& out, std::ostream&) {
  require_format(inv, false);
  const auto scn = scenario_for(inv);
  const auto unc = uncertainty_for(inv);
  const auto cfg = config_for(inv);
  const auto rep = run_iwfa(scn, unc, cfg);
  nlohmann::json doc = to_json(rep);
  doc["orthogonality"] = orthogonality_index(rep.profile);
  doc["social_utility_nominal_eval"] = social_utility(scn, rep.profile, UncertaintySpec::nominal());
  doc["metadata"] = metadata(inv);
  write_text(inv.out, doc.dump(2) + "\n", out);
  return rep.converged ? kExitOk : kExitNumerical;
}

int cmd_check(const CliInvocation& inv, std::ostream& out, std::ostream&) {
  require_format(inv, false);
  const auto scn = scenario_for(inv);
  const auto unc = uncertainty_for(inv);
  const auto report = check_conditions(scn, unc);
  nlohmann::json doc = to_json(report);
  bool pass = report.uniqueness_holds && report.convergence_holds;
  if (!inv.profile.empty()) {
    const auto profile =
        profile_from_json(parse_json_document(read_file(inv.profile), "profile"));
    require_dimensions(scn, profile);
    const bool feasible = is_feasible(scn, profile);
    doc["profile_feasible"] = feasible;
    pass = pass && feasible;
    if (inv.equilibrium) {
      const double gap = equilibrium_gap(scn, unc, profile);
      doc["equilibrium_gap"] = gap;
      doc["is_equilibrium"] = gap <= inv.eq_tol;
      pass = pass && gap <= inv.eq_tol;
    }
  } else if (inv.equilibrium) {
    throw InvalidInput("--equilibrium needs --profile");
  }
  doc["pass"] = pass;
  doc["metadata"] = metadata(inv);
  write_text(inv.out, doc.dump(2) + "\n", out);
  return pass ? kExitOk : kExitNumerical;
}

int cmd_sweep(const CliInvocation& inv, std::ostream& out, std::ostream&) {
  require_format(inv, true);
  if (inv.realizations < 1) throw InvalidInput("--realizations must be at least 1");
  ScenarioGeneratorSpec gen =
      ScenarioGeneratorSpec::defaults(parse_regime(inv.regime), inv.users, inv.channels, inv.seed);
  gen.fading = !inv.no_fading;
  SweepSpec sweep;
  sweep.mode = parse_sweep_mode(inv.sweep_mode);
  sweep.grid = parse_grid(inv.grid);
  sweep.realizations = inv.realizations;
  sweep.fixed_epsilon = inv.fixed_epsilon;
  sweep.evaluation = parse_evaluation(inv.evaluation);
  IterationConfig cfg = config_for(inv);
  const auto result = run_sweep(gen, sweep, cfg, inv.jobs);
  if (inv.format == "csv") {
    write_text(inv.out, with_metadata_csv(metadata(inv), to_csv(result)), out);
  } else {
    nlohmann::json doc = to_json(result);
    doc["generator"] = to_json(gen);
    doc["sweep"] = to_json(sweep);
    doc["metadata"] = metadata(inv);
    write_text(inv.out, doc.dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_reproduce(const CliInvocation& inv, std::ostream& out, std::ostream&) {
  return finish(reproduce(inv.target, inv.jobs), inv, out);
}

Reproduction reproduce(const std::string& target, unsigned jobs) {
  if (target == "table2") return reproduce_table2();
  if (target == "table3") return reproduce_table3();
  if (target == "fig1") return reproduce_fig1(jobs);
  if (target == "fig2") return reproduce_fig2(jobs);
  if (target == "fig3") return reproduce_delta(Regime::low_interference, "fig3", jobs);
  if (target == "fig4") return reproduce_delta(Regime::high_interference, "fig4", jobs);
  throw InvalidInput("unknown reproduce target '" + target + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  CLI::App app{"Robust iterative water-filling for multi-user power allocation"};
  app.require_subcommand(1);

  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", inv.scenario, "Scenario JSON file, or 'table1'");
    sub->add_option("--generate", inv.generate, "Generate a scenario: low or high interference");
    sub->add_option("--users", inv.users, "Generated users")->capture_default_str();
    sub->add_option("--channels", inv.channels, "Generated channels")->capture_default_str();
    sub->add_option("--seed", inv.seed, "Generator / random-init seed")->capture_default_str();
    sub->add_flag("--no-fading", inv.no_fading, "Disable exponential fading");
  };
  auto add_uncertainty = [&](CLI::App* sub) {
    sub->add_option("--mode", inv.mode, "nominal, worst_case or probabilistic")
        ->capture_default_str();
    sub->add_option("--epsilon", inv.epsilon, "Relative uncertainty")->capture_default_str();
    sub->add_option("--delta0", inv.delta0, "Probability level")->capture_default_str();
  };
  auto add_iteration = [&](CLI::App* sub) {
    sub->add_option("--schedule", inv.schedule, "simultaneous or sequential")
        ->capture_default_str();
    sub->add_option("--tol", inv.tol, "Convergence tolerance (sup-norm per round)")
        ->capture_default_str();
    sub->add_option("--max-iters", inv.max_iters, "Maximum rounds")->capture_default_str();
    sub->add_option("--init", inv.init, "zeros, masks, uniform_budget or random")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", inv.out, "Output file (default stdout)");
    sub->add_option("--format", inv.format, "json or csv")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Run best-response dynamics to an equilibrium");
  add_scenario(solve);
  add_uncertainty(solve);
  add_iteration(solve);
  add_output(solve);

  auto* check = app.add_subcommand("check", "Evaluate uniqueness/convergence conditions");
  add_scenario(check);
  add_uncertainty(check);
  add_output(check);
  check->add_option("--profile", inv.profile, "Profile JSON to test");
  check->add_flag("--equilibrium", inv.equilibrium, "Also test the profile for a fixed point");
  check->add_option("--eq-tol", inv.eq_tol, "Fixed-point tolerance")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep over the uncertainty level");
  sweep->add_option("--regime", inv.regime, "low or high")->capture_default_str();
  sweep->add_option("--users", inv.users)->capture_default_str();
  sweep->add_option("--channels", inv.channels)->capture_default_str();
  sweep->add_option("--seed", inv.seed, "Base seed")->capture_default_str();
  sweep->add_flag("--no-fading", inv.no_fading);
  sweep->add_option("--sweep-mode", inv.sweep_mode,
                    "nominal_baseline, worst_case_sweep, probabilistic_sweep, "
                    "known_value_inflation")
      ->capture_default_str();
  sweep->add_option("--grid", inv.grid, "Comma-separated grid values")->capture_default_str();
  sweep->add_option("--realizations", inv.realizations)->capture_default_str();
  sweep->add_option("--fixed-epsilon", inv.fixed_epsilon)->capture_default_str();
  sweep->add_option("--evaluation", inv.evaluation, "nominal or robust")->capture_default_str();
  sweep->add_option("--jobs", inv.jobs, "Threads (0 = all cores)")->capture_default_str();
  add_iteration(sweep);
  add_output(sweep);

  auto* repro = app.add_subcommand("reproduce", "Regenerate a reference table or figure");
  repro->add_option("target", inv.target, "table2, table3, fig1, fig2, fig3 or fig4")
      ->required();
  repro->add_option("--out-dir", inv.out_dir, "Artifact directory")->capture_default_str();
  repro->add_option("--jobs", inv.jobs)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*solve) {
      inv.subcommand = "solve";
      return cmd_solve(inv, out, err);
    }
    if (*check) {
      inv.subcommand = "check";
      return cmd_check(inv, out, err);
    }
    if (*sweep) {
      inv.subcommand = "sweep";
      return cmd_sweep(inv, out, err);
    }
    inv.subcommand = "reproduce";
    return cmd_reproduce(inv, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateMultiplier& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rwf::cli
