#pragma once

// The four user-facing commands. Each produces a human-readable report, the
// same report as a JSON document with stable keys, and a process exit code
// (0 feasible / success, 1 input or validation failure, 2 search completed
// without a feasible timetable).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ahpga/bundle.hpp"

namespace ahpga::cmd {

struct Options {
  std::optional<double> st;           // overrides the config value
  std::optional<std::uint64_t> seed;  // overrides the config value
  bool verbose = false;
  bool allow_inconsistent = false;
  bool continue_to_budget = false;    // or-ed with the config value
  std::uint64_t limit = 1'000'000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;

struct Outcome {
  std::string text;
  std::string json;
  int exit_code = kExitOk;
  bool feasible = false;
  double f_satisfaction = 0.0;
};

Outcome score(const io::Bundle& bundle, const Options& opts);

/// Writes the best timetable to timetable_out (when given) even if the search
/// ends without a feasible solution.
Outcome solve(const io::Bundle& bundle, const Options& opts,
              const std::optional<std::filesystem::path>& timetable_out);

/// Evaluates with both the evaluator and the oracle; a disagreement is an
/// internal error.
Outcome check(const io::Bundle& bundle, const std::filesystem::path& timetable_file,
              const Options& opts);

Outcome oracle(const io::Bundle& bundle, const Options& opts);

}  // namespace ahpga::cmd
