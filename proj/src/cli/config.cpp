#include "sostrust/cli/config.hpp"

#include <cstdio>
#include <stdexcept>

#include "sostrust/io.hpp"

namespace sostrust::cli {

std::string_view to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::check_metrics:
      return "check-metrics";
    case CommandKind::eval_simtrust:
      return "eval-simtrust";
    case CommandKind::run_tdg:
      return "run-tdg";
    case CommandKind::run_hybrid:
      return "run-hybrid";
  }
  return "unknown";
}

SweepAxis parse_sweep(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == spec.size()) {
    throw std::invalid_argument("--sweep expects KEY=V1,V2,... got '" + std::string(spec) + "'");
  }
  SweepAxis axis{std::string(spec.substr(0, eq)), {}};
  std::string_view rest = spec.substr(eq + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string token(rest.substr(0, comma));
    if (token.empty()) {
      throw std::invalid_argument("--sweep has an empty value in '" + std::string(spec) + "'");
    }
    auto parsed = nlohmann::json::parse(token, nullptr, false);
    axis.values.push_back(parsed.is_discarded() ? nlohmann::json(token) : parsed);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return axis;
}

nlohmann::json load_config(const RunManifest& manifest) {
  nlohmann::json config = nlohmann::json::object();
  if (manifest.config_path) {
    config = io::read_json_file(*manifest.config_path);
    if (!config.is_object()) {
      throw io::InputError(manifest.config_path->string() + ": config must be a JSON object");
    }
  }
  if (manifest.seed) {
    config["seed"] = *manifest.seed;
  }
  return config;
}

void set_path(nlohmann::json& config, std::string_view dotted_key, const nlohmann::json& value) {
  nlohmann::json* node = &config;
  while (true) {
    const auto dot = dotted_key.find('.');
    const std::string key(dotted_key.substr(0, dot));
    if (key.empty()) throw std::invalid_argument("empty component in config key");
    if (!node->is_object()) {
      throw std::invalid_argument("config key '" + key + "' is not inside an object");
    }
    if (dot == std::string_view::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    if (node->is_null()) *node = nlohmann::json::object();
    dotted_key = dotted_key.substr(dot + 1);
  }
}

std::vector<std::pair<std::string, nlohmann::json>> expand_sweep(const nlohmann::json& base,
                                                                 const std::vector<SweepAxis>& axes) {
  std::vector<std::pair<std::string, nlohmann::json>> points{{"", base}};
  for (const SweepAxis& axis : axes) {
    std::vector<std::pair<std::string, nlohmann::json>> next;
    for (const auto& [label, config] : points) {
      for (const auto& value : axis.values) {
        auto updated = config;
        set_path(updated, axis.key, value);
        const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        next.emplace_back(label + (label.empty() ? "" : "__") + axis.key + "=" + text,
                          std::move(updated));
      }
    }
    points = std::move(next);
  }
  return points;
}

std::string config_hash(const nlohmann::json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void prepare_output_dir(const std::filesystem::path& dir, bool force) {
  namespace fs = std::filesystem;
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) {
      throw std::runtime_error("output path exists and is not a directory: " + dir.string());
    }
    if (!fs::is_empty(dir) && !force) {
      throw std::runtime_error("output directory is not empty: " + dir.string() +
                               " (pass --force to overwrite)");
    }
    return;
  }
  fs::create_directories(dir);
}

}  // namespace sostrust::cli
