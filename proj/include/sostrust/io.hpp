#pragma once

#include <filesystem>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace sostrust::io {

/// Input error carrying the offending location, e.g. "corpus.jsonl:3: ...".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one JSON document per non-blank line. Parse failures and exceptions
/// thrown by `on_record` are rethrown as InputError tagged "<source>:<line>".
void read_json_lines(std::istream& in, std::string_view source,
                     const std::function<void(const nlohmann::json&)>& on_record);
void read_json_lines(const std::filesystem::path& path,
                     const std::function<void(const nlohmann::json&)>& on_record);

/// Parses a whole JSON document; errors report "<source>:<line>:<column>".
nlohmann::json parse_json_document(std::string_view text, std::string_view source);
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Reads a file; throws InputError naming the path when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

}  // namespace sostrust::io
