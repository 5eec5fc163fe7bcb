#include "sostrust/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sostrust::io {

void read_json_lines(std::istream& in, std::string_view source,
                     const std::function<void(const nlohmann::json&)>& on_record) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = std::string(source) + ":" + std::to_string(number) + ": ";
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(where + "malformed JSON (" + e.what() + ")");
    }
    try {
      on_record(record);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + e.what());
    }
  }
}

void read_json_lines(const std::filesystem::path& path,
                     const std::function<void(const nlohmann::json&)>& on_record) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open input file: " + path.string());
  }
  read_json_lines(in, path.string(), on_record);
}

nlohmann::json parse_json_document(std::string_view text, std::string_view source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": malformed JSON (" + e.what() + ")");
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  return parse_json_document(read_file(path), path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open input file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace sostrust::io
