#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with in-memory streams.

#include "qhh/hyperplane.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qhh::app {

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_bad_config = 2,
  exit_truncated = 3,
};

enum class AutomorphismKind { canonical, identity, explicit_p, solve_top };

struct RunConfig {
  AlgebraSpec algebra = AlgebraSpec::generic_symbolic(1);
  /// How the algebra was given: "generic", "one-parameter", "pairs", "matrix".
  std::string algebra_source = "generic";
  AutomorphismKind automorphism = AutomorphismKind::canonical;
  ScalingAutomorphism sigma;
  std::optional<MultiIndex> alpha;  // solve-top only
  int bound = 2;
  int n_max = 2;
  bool auto_primes = false;
  bool allow_truncated = false;
  bool expect_top = false;
  std::string out_path;
};

/// Thrown for every configuration problem; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string automorphism_name(AutomorphismKind kind);

/// "x1^2 x2" for α, "x1∧x3" for β, "1" for the zero index.
std::string monomial_text(const MultiIndex& alpha);
std::string wedge_text(const ExteriorIndex& beta);

}  // namespace qhh::app
