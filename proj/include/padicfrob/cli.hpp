#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "padicfrob/mum.hpp"
#include "padicfrob/padic.hpp"

namespace padicfrob {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // non-integral, or selftest failure
  kExitUsage = 2,
  kExitPrecision = 3,
  kExitInconsistent = 4,
  kExitNoOperator = 5,
};

struct RunConfig {
  std::string family = "simplicial";  // simplicial | hyperoctahedral | file
  int n = 4;
  long p = 7;
  bool p_given = false;
  std::size_t t_order = 0;  // 0 -> 10p
  int precision = 12;
  std::optional<int> jmax;
  std::optional<std::string> perturb;
  std::string format = "table";
  unsigned long seed = 20240501;
  std::optional<std::string> operator_file;
  std::optional<std::string> series_file;
  std::optional<int> degree;
  bool quick = false;
  bool inject_fault = false;

  std::size_t M() const { return t_order ? t_order : static_cast<std::size_t>(10 * p); }
};

/// Throws std::invalid_argument with a usage message on a bad configuration.
void validate_config(const RunConfig& cfg, bool needs_prime);

/// Closed-form alpha_0..alpha_{n-1} as p-adic numbers.
std::vector<PadicNum> closed_form_alpha(const std::string& family, int n, long p, int N);

/// "alpha3" (+1), "alpha3+k" or "alpha3=v"; returns the modified list.
std::vector<PadicNum> apply_perturbation(std::vector<PadicNum> alpha, const std::string& spec);

MumOperator config_operator(const RunConfig& cfg);

struct SelftestResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Invariant suites; `quick` keeps the cheapest subset.
std::vector<SelftestResult> run_selftest(unsigned long seed, bool quick, bool inject_fault);

int cmd_alpha(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_recover(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_guess(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicfrob
