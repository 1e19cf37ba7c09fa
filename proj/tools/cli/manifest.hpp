#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dcdsum/json.hpp"

namespace dcdsum::cli {

/// Record of one invocation: what ran, with which parameters, over which
/// inputs (by SHA-256 of their bytes), producing which files.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> input_hashes;
  std::vector<std::string> outputs;
  std::string tool_version;

  void add_input(const std::filesystem::path& path);
  Json to_json() const;
};

std::string sha256_file(const std::filesystem::path& path);
std::string tool_version();

/// Writes `doc` with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& doc);

}  // namespace dcdsum::cli
