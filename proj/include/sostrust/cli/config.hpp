#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sostrust::cli {

enum class CommandKind { check_metrics, eval_simtrust, run_tdg, run_hybrid };

std::string_view to_string(CommandKind kind);

/// --sweep KEY=V1,V2,... ; KEY may be a dotted path into the config.
struct SweepAxis {
  std::string key;
  std::vector<nlohmann::json> values;
};

/// Values parse as JSON when they can (numbers, booleans, quoted strings) and
/// fall back to plain strings. Throws std::invalid_argument on a bad spec.
SweepAxis parse_sweep(std::string_view spec);

struct RunManifest {
  CommandKind command = CommandKind::check_metrics;
  std::optional<std::filesystem::path> config_path;
  std::filesystem::path out_dir;
  std::optional<std::uint64_t> seed;
  bool force = false;
  std::vector<SweepAxis> sweep;
};

/// Config file contents ({} without a file) with the seed override applied.
nlohmann::json load_config(const RunManifest& manifest);

/// Sets a dotted path such as "metric_config.alpha", creating objects on the way.
void set_path(nlohmann::json& config, std::string_view dotted_key, const nlohmann::json& value);

/// One (label, config) pair per point of the sweep grid; a single unlabeled
/// entry when there is no sweep.
std::vector<std::pair<std::string, nlohmann::json>> expand_sweep(const nlohmann::json& base,
                                                                 const std::vector<SweepAxis>& axes);

/// 64-bit FNV-1a over the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

/// Creates `dir` if absent. An existing non-empty directory is refused unless
/// `force` is set. Throws std::runtime_error.
void prepare_output_dir(const std::filesystem::path& dir, bool force);

}  // namespace sostrust::cli
