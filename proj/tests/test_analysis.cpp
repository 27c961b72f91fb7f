#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rwf/analysis.hpp"
#include "rwf/experiments.hpp"

using namespace rwf;

TEST_CASE("spectral radius small cases") {
  CHECK(spectral_radius(SquareMatrix(4)) == 0.0);
  CHECK(spectral_radius(SquareMatrix::from_rows({{0, 0.5}, {0.5, 0}})) ==
        doctest::Approx(0.5).epsilon(1e-10));
  // nilpotent, reducible
  CHECK(spectral_radius(SquareMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})) == 0.0);
  // periodic: eigenvalues +-sqrt(ab)
  CHECK(spectral_radius(SquareMatrix::from_rows({{0, 4}, {1, 0}})) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius(SquareMatrix::from_rows({{3}})) == 3.0);
  CHECK_THROWS_AS(spectral_radius(SquareMatrix::from_rows({{0, -1}, {1, 0}})), InvalidInput);
  CHECK_THROWS_AS(SquareMatrix::from_rows({{0, 1}}), InvalidInput);
}

TEST_CASE("spectral radius against the characteristic polynomial") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::Matrix a(5, std::vector<double>(5));
    for (auto& row : a)
      for (double& v : row) v = u(rng);
    CHECK(spectral_radius(SquareMatrix::from_rows(a)) ==
          doctest::Approx(oracle::perron_root(a)).epsilon(1e-9));
  }
}

TEST_CASE("operator norm") {
  CHECK(operator_norm_l2(SquareMatrix(3)) == 0.0);
  for (auto [a, b] : {std::pair{0.3, 0.7}, {2.0, 0.5}, {1.0, 1.0}})
    CHECK(operator_norm_l2(SquareMatrix::from_rows({{0, a}, {b, 0}})) ==
          doctest::Approx(std::max(a, b)).epsilon(1e-10));
  const auto m = SquareMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(frobenius_norm(m) == doctest::Approx(std::sqrt(30.0)));
  // largest singular value of [[1,2],[3,4]]
  CHECK(operator_norm_l2(m) == doctest::Approx(5.464985704219043).epsilon(1e-10));
}

TEST_CASE("uniqueness condition, trivial cases") {
  const NetworkScenario one(1, 2, {1.0, 1.0}, {0.1, 0.1}, {1.0}, {1.0, 1.0});
  auto r = check_uniqueness(one, UncertaintySpec::nominal());
  CHECK(r.per_channel_lhs == std::vector<double>{0.0, 0.0});
  CHECK(r.uniqueness_holds);
  r = check_uniqueness(one, UncertaintySpec::worst_case(0.4));
  CHECK(r.per_channel_lhs[0] == doctest::Approx(0.4));
  CHECK(r.uniqueness_holds);
  CHECK_FALSE(check_uniqueness(one, UncertaintySpec::worst_case(1.0)).uniqueness_holds);

  // two users, no cross gains
  const NetworkScenario iso(2, 1, {1.0, 0.0, 0.0, 1.0}, {0.1, 0.1}, {1.0, 1.0}, {1.0});
  r = check_conditions(iso, UncertaintySpec::nominal());
  CHECK(r.per_channel_lhs[0] == 0.0);
  CHECK(r.uniqueness_holds);
  CHECK(r.convergence_lhs == 0.0);
  CHECK(r.convergence_holds);
}

TEST_CASE("zero uncertainty uniqueness bounds the spectral radius") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto scn =
        generate_scenario(ScenarioGeneratorSpec::defaults(Regime::low_interference, 4, 6, seed));
    const auto r = check_uniqueness(scn, UncertaintySpec::nominal());
    for (std::size_t k = 0; k < 6; ++k) {
      const auto s = channel_ratio_matrix(scn, k);
      const double rho = spectral_radius(s);
      CHECK(r.per_channel_lhs[k] >= rho * (1 - 1e-9));
      if (r.per_channel_lhs[k] < 1.0) CHECK(rho < 1.0);
      if (s.is_symmetric()) CHECK(r.per_channel_lhs[k] == doctest::Approx(rho));
    }
  }
}

TEST_CASE("convergence condition hand example") {
  // S_max = [[0, 0.3], [0.3, 0]] realized on one channel; s_max = [0.1, 0.1]
  const NetworkScenario scn(2, 1, {1.0, 0.3, 0.3, 1.0}, {0.1, 0.1}, {1.0, 1.0}, {1.0});
  const std::vector<std::vector<double>> s_bar{{0.2}, {0.2}};
  const auto r = check_convergence(scn, UncertaintySpec::worst_case(0.5), s_bar);
  CHECK(r.convergence_lhs == doctest::Approx(0.3 + std::sqrt(2.0) * std::sqrt(0.02)));
  CHECK(r.convergence_lhs == doctest::Approx(0.5));
  CHECK(r.convergence_holds);
  CHECK_THROWS_AS(check_convergence(scn, UncertaintySpec::nominal(), {{0.2}}), InvalidInput);
}

TEST_CASE("reference scenario fails both conditions") {
  const auto r = check_conditions(table1_scenario(), UncertaintySpec::nominal());
  CHECK_FALSE(r.uniqueness_holds);
  CHECK_FALSE(r.convergence_holds);
}

TEST_CASE("high-interference draws fail the convergence condition") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto scn = generate_scenario(ScenarioGeneratorSpec::defaults(Regime::high_interference, 8, 64, seed));
    CHECK_FALSE(check_conditions(scn, UncertaintySpec::nominal()).convergence_holds);
  }
}

TEST_CASE("interference upper bound dominates every feasible profile") {
  const auto scn = table1_scenario();
  const auto bound = interference_upper_bound(scn);
  for (const auto& p : {table2_profile(), table3_profile(), PowerProfile(3, 6)})
    for (std::size_t i = 0; i < 3; ++i) {
      const auto s = normalized_interference(scn, p, i);
      for (std::size_t k = 0; k < 6; ++k) CHECK(s[k] <= bound[i][k]);
    }
}

TEST_CASE("orthogonality index") {
  CHECK(orthogonality_index(PowerProfile(1, 5, 0.2)) == 1.0);
  CHECK(orthogonality_index(table3_profile()) == 1.0);
  CHECK(orthogonality_index(table2_profile()) == doctest::Approx(4.0 / 6.0));
  CHECK(orthogonality_index(PowerProfile(3, 4, 0.2)) == 0.0);
  CHECK(orthogonality_index(PowerProfile(3, 4, 0.0005)) == 1.0);
}

TEST_CASE("social utility") {
  const auto scn = table1_scenario();
  CHECK(social_utility(scn, PowerProfile(3, 6), UncertaintySpec::nominal()) == 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    total += user_utility(scn, table2_profile(), i, UncertaintySpec::nominal());
  CHECK(social_utility(scn, table2_profile(), UncertaintySpec::nominal()) == doctest::Approx(total));
  CHECK(social_utility(scn, table2_profile(), UncertaintySpec::worst_case(1.0)) < total);
}

TEST_CASE("matrix norm ordering on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 10;
    SquareMatrix a(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = u(rng) < 0.3 ? 0.0 : u(rng);
    const double rho = spectral_radius(a);
    const double two = operator_norm_l2(a);
    CHECK(rho <= two + 1e-9);
    CHECK(two <= frobenius_norm(a) + 1e-9);
    CHECK(spectral_radius(a.symmetric_part()) == doctest::Approx(operator_norm_l2(a.symmetric_part())).epsilon(1e-8));
  }
}
