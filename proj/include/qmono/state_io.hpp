#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qmono/state.hpp"

namespace qmono {

/// JSON state format:
///   {"dims": [2,2,2], "kind": "pure",  "amplitudes": [[re,im], ...]}
///   {"dims": [2,2],   "kind": "mixed", "matrix": [[[re,im], ...], ...]}   (row-major)
nlohmann::json state_to_json(const State& state);

/// Throws ParseError on malformed JSON structure. A state whose norm or
/// trace is off is rejected (ArgumentError) unless renormalize is set.
State state_from_json(const nlohmann::json& j, bool renormalize = false);

State read_state_file(const std::filesystem::path& path, bool renormalize = false);

/// Builtin specs: "ghz:N", "w:N", "bell", "random:N:SEED" (N-qubit Haar
/// pure state) and "file:PATH".
State parse_state_spec(std::string_view spec, bool renormalize = false);

/// "0|12" (one digit per subsystem, up to 10 subsystems) or "0,1|2,10".
/// Checked against num_subsystems.
Bipartition parse_cut(std::string_view text, int num_subsystems);

std::string format_cut(const Bipartition& cut);

const Dims& state_dims(const State& state);

}  // namespace qmono
