// Command-line front end: solve, check, sweep and reproduce.
//
// Exit codes: 0 converged / all checks pass, 1 usage or input error,
// 2 numerical non-convergence or a failed condition/check.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace rwf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

struct CliInvocation {
  std::string subcommand;

  // scenario source: a file path or "table1", or a generator regime
  std::string scenario;
  std::string generate;
  std::size_t users = 8;
  std::size_t channels = 64;
  std::uint64_t seed = 1;
  bool no_fading = false;

  // uncertainty
  std::string mode = "nominal";
  double epsilon = 0.0;
  double delta0 = 0.5;

  // iteration
  std::string schedule = "sequential";
  double tol = 1e-8;
  int max_iters = 500;
  std::string init = "zeros";

  // check
  std::string profile;
  bool equilibrium = false;
  double eq_tol = 1e-6;

  // sweep
  std::string regime = "low";
  std::string sweep_mode = "worst_case_sweep";
  std::string grid = "0,0.2,0.4,0.6,0.8,1.0";
  int realizations = 20;
  double fixed_epsilon = 0.8;
  std::string evaluation = "nominal";
  unsigned jobs = 0;

  // reproduce
  std::string target;
  std::string out_dir = ".";

  std::string out;
  std::string format = "json";
};

/// Every option with its effective value; embedded in all outputs.
nlohmann::json metadata(const CliInvocation& inv);

int cmd_solve(const CliInvocation& inv, std::ostream& out, std::ostream& err);
int cmd_check(const CliInvocation& inv, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliInvocation& inv, std::ostream& out, std::ostream& err);
int cmd_reproduce(const CliInvocation& inv, std::ostream& out, std::ostream& err);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Reproduction {
  /// file name -> contents
  std::vector<std::pair<std::string, std::string>> artifacts;
  std::vector<Check> checks;
};

/// Fixed pipelines for table2, table3, fig1 .. fig4 with their default seeds.
/// Throws InvalidInput for an unknown target.
Reproduction reproduce(const std::string& target, unsigned jobs = 0);

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rwf::cli
