#pragma once

#include <ostream>

#include "cli/config.hpp"

namespace qmono::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kInvalidInput = 2,
  kUnsupported = 3,
  kViolation = 4,
};

// Each command writes its report to `out` and diagnostics to `err`, and
// maps library exceptions to exit codes instead of throwing.

int cmd_measure(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Exit 4 when any report is a theorem-regime violation.
int cmd_monogamy(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// W-state negativity residual table (alpha,n3,n4,n5) plus a JSON sidecar
/// with the bisection crossings and the built-in spot check against direct
/// state computation. Exit 4 if the closed form fails either check.
int cmd_fig1(const RunConfig& cfg, std::ostream& csv, std::ostream& sidecar, std::ostream& err);

/// Suites: lemma1, ordering, regime, polygamy, closedforms, roofgap.
/// Exit 4 on any invariant failure.
int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand first), merges the --config file under the
/// flags, opens output files and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmono::cli
