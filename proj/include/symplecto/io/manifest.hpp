#pragma once

// Run manifests: one JSON file per CLI run recording how every output file
// was produced and its SHA-256, so a later `verify --manifest` can detect
// modified or missing outputs.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace symplecto::io {

struct ManifestOutput {
  std::string path;  // relative to the manifest's directory when possible
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  std::vector<std::string> command_line;
  nlohmann::json config = nlohmann::json::object();
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
  std::uint64_t seed = 42;
  std::vector<ManifestOutput> outputs;

  /// Hashes `file` and records it; a file already listed is replaced.
  void add_output(const std::filesystem::path& file, const std::filesystem::path& manifest_dir);
  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

/// A manifest stamped with the library version and the current time.
RunManifest make_manifest(int argc, const char* const* argv);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

void write_manifest(const RunManifest& m, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

/// One message per missing or mismatching output; empty when all match.
std::vector<std::string> verify_manifest(const std::filesystem::path& path);

}  // namespace symplecto::io
