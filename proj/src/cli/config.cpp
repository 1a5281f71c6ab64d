#include "cli/config.hpp"

#include <cstdlib>
#include <fstream>

#include "qmono/errors.hpp"

namespace qmono::cli {

using nlohmann::json;

namespace {

template <typename T>
T get_as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ParseError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw ParseError("format must be json or csv, got '" + name + "'");
}

void apply_config_json(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw ParseError("config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "state") cfg.state = get_as<std::string>(v, key);
    else if (key == "renormalize") cfg.renormalize = get_as<bool>(v, key);
    else if (key == "measure") cfg.measure = get_as<std::string>(v, key);
    else if (key == "cut") cfg.cut = get_as<std::string>(v, key);
    else if (key == "alpha") cfg.alpha = get_as<double>(v, key);
    else if (key == "alpha_min") cfg.alpha_min = get_as<double>(v, key);
    else if (key == "alpha_max") cfg.alpha_max = get_as<double>(v, key);
    else if (key == "alpha_step") cfg.alpha_step = get_as<double>(v, key);
    else if (key == "k") cfg.k = get_as<int>(v, key);
    else if (key == "focus") cfg.focus = get_as<int>(v, key);
    else if (key == "seed") {
      cfg.seed = get_as<std::uint64_t>(v, key);
      cfg.roof.seed = cfg.seed;
    }
    else if (key == "random") cfg.random = get_as<int>(v, key);
    else if (key == "n") cfg.n = get_as<int>(v, key);
    else if (key == "samples") cfg.samples = get_as<int>(v, key);
    else if (key == "suite") cfg.suite = get_as<std::string>(v, key);
    else if (key == "tol") cfg.tol = get_as<double>(v, key);
    else if (key == "output") cfg.output = get_as<std::string>(v, key);
    else if (key == "format") cfg.format = parse_format(get_as<std::string>(v, key));
    else if (key == "ensemble_size") cfg.roof.ensemble_size = get_as<int>(v, key);
    else if (key == "restarts") cfg.roof.restarts = get_as<int>(v, key);
    else if (key == "max_iterations") cfg.roof.max_iterations = get_as<int>(v, key);
    else if (key == "tolerance") cfg.roof.tolerance = get_as<double>(v, key);
    else throw ParseError("unknown config key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("config file " + path.string() + ": " + e.what());
  }
  apply_config_json(cfg, j);
}

std::filesystem::path resolve_output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

}  // namespace qmono::cli
