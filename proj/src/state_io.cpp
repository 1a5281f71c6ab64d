#include "qmono/state_io.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "qmono/errors.hpp"
#include "qmono/factories.hpp"

namespace qmono {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_side(std::string_view text, bool comma_list) {
  std::vector<int> out;
  if (text.empty()) throw ParseError("cut side is empty");
  if (!comma_list) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("cut digits must be 0-9; use comma lists beyond 10 subsystems");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_int(piece, "subsystem index"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

const Dims& state_dims(const State& state) {
  return std::visit([](const auto& s) -> const Dims& { return s.dims(); }, state);
}

json state_to_json(const State& state) {
  json j;
  j["dims"] = state_dims(state);
  if (const auto* psi = std::get_if<PureState>(&state)) {
    j["kind"] = "pure";
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi->amplitudes().size(); ++i) amps.push_back(complex_to_json(psi->amplitudes()(i)));
    j["amplitudes"] = std::move(amps);
  } else {
    const auto& m = std::get<DensityMatrix>(state).matrix();
    j["kind"] = "mixed";
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

State state_from_json(const json& j, bool renormalize) {
  if (!j.is_object()) throw ParseError("state JSON must be an object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
    throw ParseError("state JSON needs a nonempty \"dims\" array");
  }
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1) throw ParseError("\"dims\" entries must be positive integers");
    dims.push_back(d.get<int>());
  }
  const std::size_t n = total_dim(dims);
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("state JSON needs \"kind\": \"pure\" or \"mixed\"");
  const auto kind = j["kind"].get<std::string>();

  if (kind == "pure") {
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) throw ParseError("pure state needs \"amplitudes\"");
    const auto& a = j["amplitudes"];
    if (a.size() != n) throw ParseError("\"amplitudes\" length does not match dims");
    Vector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(a[i]);
    if (renormalize) return PureState::normalized(std::move(v), std::move(dims));
    return PureState(std::move(v), std::move(dims));
  }
  if (kind == "mixed") {
    if (!j.contains("matrix") || !j["matrix"].is_array()) throw ParseError("mixed state needs \"matrix\"");
    const auto& rows = j["matrix"];
    if (rows.size() != n) throw ParseError("\"matrix\" row count does not match dims");
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) throw ParseError("\"matrix\" rows must have prod(dims) entries");
      for (std::size_t c = 0; c < n; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(rows[r][c]);
      }
    }
    if (renormalize) {
      const double tr = m.trace().real();
      if (!(tr > 0.0)) throw ArgumentError("cannot renormalize a matrix with nonpositive trace");
      m /= tr;
    }
    return DensityMatrix(std::move(m), std::move(dims));
  }
  throw ParseError("\"kind\" must be \"pure\" or \"mixed\", got \"" + kind + "\"");
}

State read_state_file(const std::filesystem::path& path, bool renormalize) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("state file " + path.string() + ": " + e.what());
  }
  return state_from_json(j, renormalize);
}

State parse_state_spec(std::string_view spec, bool renormalize) {
  if (spec == "bell") return bell_state();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown state spec '" + std::string(spec) + "'");
  const auto head = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (head == "file") return read_state_file(std::filesystem::path(std::string(rest)), renormalize);
  if (head == "ghz") return ghz_state(parse_int(rest, "qubit count"));
  if (head == "w") return w_state(parse_int(rest, "qubit count"));
  if (head == "random") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) throw ParseError("random spec is random:N:SEED");
    const int n = parse_int(rest.substr(0, second), "qubit count");
    if (n < 1 || n > 20) throw ArgumentError("random state qubit count must be in [1, 20]");
    return random_pure_state(Dims(static_cast<std::size_t>(n), 2), parse_u64(rest.substr(second + 1), "seed"));
  }
  throw ParseError("unknown state spec '" + std::string(spec) + "'");
}

Bipartition parse_cut(std::string_view text, int num_subsystems) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("cut must have the form A|B, e.g. 0|12");
  }
  const bool comma_list = text.find(',') != std::string_view::npos || num_subsystems > 10;
  Bipartition cut(parse_side(text.substr(0, bar), comma_list), parse_side(text.substr(bar + 1), comma_list));
  Dims dims(static_cast<std::size_t>(num_subsystems), 2);
  cut.check_against(dims);
  return cut;
}

std::string format_cut(const Bipartition& cut) {
  const bool comma_list = cut.num_subsystems() > 10;
  auto side = [&](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (comma_list && i > 0) out += ',';
      out += std::to_string(s[i]);
    }
    return out;
  };
  return side(cut.side_a()) + "|" + side(cut.side_b());
}

}  // namespace qmono
