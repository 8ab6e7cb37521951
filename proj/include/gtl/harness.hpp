// Experiment drivers behind the command-line tool.  Each experiment checks
// one family of structural claims about TL(X) and reports whether the
// outcome matches the documented expectation for that graph; expected
// failures (counterexample graphs) therefore still count as a pass.

#pragma once

#include "gtl/hecke.hpp"
#include "gtl/ic_solver.hpp"
#include "gtl/jsonio.hpp"
#include "gtl/tl_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace gtl {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string graph;
  std::string experiment;  // group | mult | ic | monomial-check |
                           // counterexample | positivity | kl-kernel |
                           // transitions
  std::optional<int> cap;  // required for infinite graphs
  std::string format = "json";  // json | csv | latex
  std::string cache_dir;        // empty disables the result cache
  long budget = 10000;
};

struct ExperimentReport {
  std::string experiment;
  bool pass = false;     // verdict matches the documented expectation
  Json summary;          // machine-readable verdicts and witnesses
  std::string payload;   // main artifact in the requested format
  double seconds = 0;    // wall time; excluded from payload determinism
};

ExperimentReport run(const ExperimentConfig& config);

inline int exit_code(const ExperimentReport& report) {
  return report.pass ? 0 : 1;
}

// Re-expansion of a t-basis vector over the canonical basis of the table.
PolyVec expand_over_ic(const ICTable& table, PolyVec tvec);

}  // namespace gtl
