#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace c4count::cli {

std::string sha256_file(const std::filesystem::path& path);

/// What a run consumed and produced, enough to repeat it.
struct RunManifest {
  std::vector<std::string> command;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::vector<std::string> outputs;

  void add_input(const std::filesystem::path& p);
  std::string to_json() const;
};

}  // namespace c4count::cli
