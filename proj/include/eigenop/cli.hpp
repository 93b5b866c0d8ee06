#pragma once

// Batch front door for eigenop_lab: argument parsing into an
// ExperimentConfig, command dispatch, and exit-status mapping.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eigenop/budget.hpp"
#include "eigenop/dynamics.hpp"
#include "eigenop/errors.hpp"
#include "eigenop/operators.hpp"

namespace eigenop::cli {

enum class Command { classify, orbit, construct, verify, selftest };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct ExperimentConfig {
  Command command = Command::selftest;
  std::optional<EigenOp> op;
  std::optional<TruncatedSeries> start;
  std::vector<NamedSeries> targets;
  std::vector<Seminorm> seminorms;
  bool projective = false;
  std::size_t n_max = 0;  // 0: command default
  double tol = 1e-3;
  std::string lemma;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  double M = 1.0;
  std::size_t n = 1;
  std::size_t m = 0;  // 0: n d + 1
  std::size_t s_max = 64;
  std::string out_path;  // empty: stdout
  Format format = Format::json;
  Budget budget;
};

/// invalid_argument / precondition -> 2, budget / truncation / numeric -> 3.
int exit_status(ErrorCode code);

/// Checks the command-specific requirements; throws Error(invalid_argument).
void validate(const ExperimentConfig& config);

/// Runs the command, writing the result to config.out_path or `out`.
/// Returns 0 on success and 1 when a verification or selftest fails; library
/// errors propagate as exceptions.
int run(const ExperimentConfig& config, std::ostream& out);

/// Text printed by --schema: input formats, output fields, CSV columns.
std::string schema_text();

/// Full entry point: parse, validate, run, report errors as a JSON envelope.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace eigenop::cli
