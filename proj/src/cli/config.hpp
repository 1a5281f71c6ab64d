#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qmono/roof_config.hpp"

namespace qmono::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;

  std::string state;  // builtin spec or file:PATH
  bool renormalize = false;
  std::string measure = "negativity";
  std::string cut;    // empty: focus|rest for the state's subsystem count

  std::optional<double> alpha;
  double alpha_min = 0.02;
  double alpha_max = 1.98;
  double alpha_step = 0.02;

  int k = 0;          // 0: plain pairwise residual
  int focus = 0;
  std::uint64_t seed = 0;
  int random = 0;     // monogamy over this many random states
  int n = 3;          // qubit count for random states
  int samples = 100;
  std::string suite;
  double tol = 1e-9;

  RoofConfig roof;

  std::string output; // empty: stdout
  OutputFormat format = OutputFormat::json;
};

/// Overlays keys of a JSON config object onto cfg. Keys use the flag names
/// with '_' for '-' (state, measure, cut, alpha, alpha_min, alpha_max,
/// alpha_step, k, focus, seed, random, n, samples, suite, tol, renormalize,
/// output, format) plus the optimizer keys ensemble_size, restarts,
/// max_iterations and tolerance. Unknown keys throw ParseError.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);

/// Reads a JSON config file and applies it.
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

OutputFormat parse_format(const std::string& name);

/// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutputDirEnv = "QMONO_OUTPUT_DIR";

/// Relative paths resolve against $QMONO_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::string& path);

}  // namespace qmono::cli
