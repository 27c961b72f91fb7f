#include <cmath>
#include <random>

#include "doctest.h"
#include "rwf/experiments.hpp"
#include "rwf/model.hpp"

using namespace rwf;

namespace {

NetworkScenario single_user(double h, double sigma, std::size_t kk) {
  return NetworkScenario(1, kk, std::vector<double>(kk, h), std::vector<double>(kk, sigma), {1.0},
                         std::vector<double>(kk, 1.0));
}

NetworkScenario two_users() {
  // gain [j][i][k], K = 2
  return NetworkScenario(2, 2, {2.0, 4.0, 0.5, 0.25, 0.3, 0.6, 1.0, 3.0}, {0.1, 0.2, 0.3, 0.4},
                         {1.0, 1.0}, {1.0, 1.0});
}

}  // namespace

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(NetworkScenario(1, 1, {1.0, 2.0}, {0.1}, {1.0}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(NetworkScenario(1, 1, {0.0}, {0.1}, {1.0}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(NetworkScenario(1, 1, {1.0}, {0.0}, {1.0}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(NetworkScenario(1, 1, {1.0}, {0.1}, {-1.0}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(NetworkScenario(1, 1, {NAN}, {0.1}, {1.0}, {1.0}), InvalidInput);
  CHECK_NOTHROW(NetworkScenario(1, 1, {1.0}, {0.1}, {1.0}, {1.0}));
}

TEST_CASE("feasibility and dimensions") {
  const auto scn = two_users();
  CHECK(is_feasible(scn, PowerProfile(2, 2, 0.5)));
  CHECK_FALSE(is_feasible(scn, PowerProfile(2, 2, 0.6)));
  CHECK_FALSE(is_feasible(scn, PowerProfile(2, 2, -0.1)));
  CHECK_THROWS_AS(require_dimensions(scn, PowerProfile(2, 3)), InvalidInput);
  CHECK_THROWS_AS(normalized_interference(scn, PowerProfile(3, 2), 0), InvalidInput);
  CHECK_THROWS_AS(PowerProfile::from_rows({{1.0}, {1.0, 2.0}}), InvalidInput);
}

TEST_CASE("normalized interference without interferers") {
  const auto scn = single_user(0.5, 0.2, 4);
  for (double s : normalized_interference(scn, PowerProfile(1, 4, 0.3), 0))
    CHECK(s == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("normalized interference with a silent opponent") {
  const auto scn = two_users();
  PowerProfile p(2, 2);
  p(0, 0) = 0.7;
  const auto s = normalized_interference(scn, p, 0);
  CHECK(s[0] == doctest::Approx(0.1 / 2.0));
  CHECK(s[1] == doctest::Approx(0.2 / 4.0));
}

TEST_CASE("normalized interference on the reference scenario matches a double loop") {
  const auto scn = table1_scenario();
  const auto p = table2_profile();
  const auto doc = to_json(scn);
  const auto& g = doc.at("gain");
  const auto& n = doc.at("noise");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto s = normalized_interference(scn, p, i);
    for (std::size_t k = 0; k < 6; ++k) {
      double acc = n[i][k].get<double>();
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) acc += p(j, k) * g[j][i][k].get<double>();
      CHECK(s[k] == doctest::Approx(acc / g[i][i][k].get<double>()).epsilon(1e-14));
    }
  }
}

TEST_CASE("uncertainty multipliers") {
  CHECK(UncertaintySpec::nominal().multiplier(0, 0) == 1.0);
  CHECK(UncertaintySpec::worst_case(0.0).multiplier(2, 3) == 1.0);
  CHECK(UncertaintySpec::worst_case(0.8).multiplier(0, 0) == doctest::Approx(1.8));
  for (double eps : {0.0, 0.3, 0.8, 1.7, 5.0})
    CHECK(UncertaintySpec::probabilistic(eps, 0.5).multiplier(0, 0) == 1.0);
  CHECK(UncertaintySpec::probabilistic(0.8, 1.0).multiplier(1, 1) ==
        UncertaintySpec::worst_case(0.8).multiplier(1, 1));
  CHECK(UncertaintySpec::probabilistic(0.8, 0.0).multiplier(0, 0) == doctest::Approx(0.2));
  CHECK(UncertaintySpec::probabilistic(0.8, 0.25).effective_epsilon(0, 0) ==
        doctest::Approx(0.4));

  const std::vector<double> s{0.5, 1.0, 2.0};
  CHECK(effective_interference(s, UncertaintySpec::worst_case(0.0), 0) == s);
  CHECK(effective_interference(s, UncertaintySpec::probabilistic(0.8, 0.5), 0) == s);
  CHECK(effective_interference(s, UncertaintySpec::probabilistic(0.8, 1.0), 0) ==
        effective_interference(s, UncertaintySpec::worst_case(0.8), 0));
}

TEST_CASE("degenerate probabilistic multiplier") {
  // 1 - 2 + 0 = -1
  CHECK_THROWS_AS(effective_interference(std::vector<double>{1.0},
                                         UncertaintySpec::probabilistic(2.0, 0.0), 0),
                  DegenerateMultiplier);
  CHECK_THROWS_AS(effective_interference(std::vector<double>{1.0},
                                         UncertaintySpec::probabilistic(1.0, 0.0), 0),
                  DegenerateMultiplier);
  CHECK_THROWS(UncertaintySpec::worst_case(-0.1));
  CHECK_THROWS(UncertaintySpec::probabilistic(0.5, 1.5));
}

TEST_CASE("per-entry epsilon") {
  const auto unc = UncertaintySpec::per_entry(RobustnessMode::worst_case, 2, 2,
                                              {0.1, 0.2, 0.3, 0.4}, 0.5);
  CHECK(unc.multiplier(1, 0) == doctest::Approx(1.3));
  CHECK(unc.fits(two_users()));
  CHECK_FALSE(unc.fits(table1_scenario()));
}

TEST_CASE("user utility") {
  const auto scn = single_user(1.0, 1.0, 1);
  CHECK(user_utility(scn, PowerProfile(1, 1), 0, UncertaintySpec::nominal()) == 0.0);
  CHECK(user_utility(scn, PowerProfile(1, 1, 1.0), 0, UncertaintySpec::nominal()) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // inflating the floor lowers the rate
  CHECK(user_utility(scn, PowerProfile(1, 1, 1.0), 0, UncertaintySpec::worst_case(1.0)) ==
        doctest::Approx(std::log(1.5)));
}

TEST_CASE("scenario JSON round trip and errors") {
  const auto scn = table1_scenario();
  CHECK(scenario_from_json(to_json(scn)) == scn);
  CHECK(parse_scenario(to_json(scn).dump()) == scn);

  auto doc = to_json(scn);
  doc.erase("noise");
  CHECK_THROWS_AS(scenario_from_json(doc), InvalidInput);

  try {
    parse_scenario("{\n  \"num_users\": 1,\n  \"num_channels\": ]\n}");
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).rfind("line 3, column ", 0) == 0);
  }
}

TEST_CASE("profile JSON") {
  const auto p = table3_profile();
  CHECK(profile_from_json(to_json(p)) == p);
  CHECK(profile_from_json(nlohmann::json{{"profile", to_json(p)}}) == p);
  CHECK_THROWS_AS(profile_from_json(nlohmann::json{{"x", 1}}), InvalidInput);
  CHECK_THROWS_AS(profile_from_json(nlohmann::json::parse("[[1, \"a\"]]")), InvalidInput);
}

TEST_CASE("robustness mode names") {
  CHECK(parse_robustness_mode("worst-case") == RobustnessMode::worst_case);
  CHECK(parse_robustness_mode(to_string(RobustnessMode::probabilistic)) ==
        RobustnessMode::probabilistic);
  CHECK_THROWS_AS(parse_robustness_mode("bogus"), InvalidInput);
}

TEST_CASE("utility is concave along feasible segments") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto scn = generate_scenario(ScenarioGeneratorSpec::defaults(Regime::low_interference, 3, 5, 11));
  for (int trial = 0; trial < 100; ++trial) {
    PowerProfile a(3, 5), b(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 5; ++k) {
        a(i, k) = 0.2 * u(rng);
        b(i, k) = 0.2 * u(rng);
      }
    PowerProfile mid = a;
    for (std::size_t k = 0; k < 5; ++k) mid(0, k) = 0.5 * (a(0, k) + b(0, k));
    PowerProfile b_own = a;
    for (std::size_t k = 0; k < 5; ++k) b_own(0, k) = b(0, k);
    const auto unc = UncertaintySpec::worst_case(0.3);
    const double lhs = user_utility(scn, mid, 0, unc);
    const double rhs = 0.5 * (user_utility(scn, a, 0, unc) + user_utility(scn, b_own, 0, unc));
    CHECK(lhs >= rhs - 1e-12);
  }
}

TEST_CASE("utility is non-increasing in the robust multiplier") {
  const auto scn = table1_scenario();
  const auto p = table2_profile();
  for (std::size_t i = 0; i < 3; ++i) {
    double prev = user_utility(scn, p, i, UncertaintySpec::nominal());
    for (double eps : {0.1, 0.5, 1.0, 3.0}) {
      const double u = user_utility(scn, p, i, UncertaintySpec::worst_case(eps));
      CHECK(u <= prev);
      prev = u;
    }
  }
}
