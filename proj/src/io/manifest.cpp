#include "symplecto/io/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <memory>
#include <stdexcept>

#include "symplecto/io/serialization.hpp"

namespace symplecto::io {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string sha256_file(const fs::path& path) { return sha256_hex(read_text_file(path)); }

void RunManifest::add_output(const fs::path& file, const fs::path& manifest_dir) {
  std::error_code ec;
  fs::path rel = fs::relative(file, manifest_dir.empty() ? fs::current_path() : manifest_dir, ec);
  const std::string key = (ec || rel.empty()) ? file.string() : rel.generic_string();
  ManifestOutput out{key, sha256_file(file), fs::file_size(file)};
  auto it = std::find_if(outputs.begin(), outputs.end(),
                         [&](const ManifestOutput& o) { return o.path == key; });
  if (it != outputs.end()) {
    *it = std::move(out);
  } else {
    outputs.push_back(std::move(out));
  }
}

json RunManifest::to_json() const {
  json outs = json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  return {{"command_line", command_line}, {"config", config}, {"version", version},
          {"timestamp", timestamp},       {"seed", seed},     {"outputs", outs}};
}

RunManifest RunManifest::from_json(const json& j) {
  RunManifest m;
  m.command_line = j.at("command_line").get<std::vector<std::string>>();
  m.config = j.value("config", json::object());
  m.version = j.at("version").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  m.seed = j.value("seed", std::uint64_t{42});
  for (const auto& o : j.at("outputs")) {
    m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>(),
                         o.value("bytes", std::uintmax_t{0})});
  }
  return m;
}

RunManifest make_manifest(int argc, const char* const* argv) {
  RunManifest m;
  m.command_line.assign(argv, argv + argc);
  m.version = SYMPLECTO_VERSION;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  m.timestamp = buf;
  return m;
}

void write_manifest(const RunManifest& m, const fs::path& path) {
  write_text_file(path, m.to_json().dump(2) + "\n");
}

RunManifest read_manifest(const fs::path& path) {
  return RunManifest::from_json(json::parse(read_text_file(path)));
}

std::vector<std::string> verify_manifest(const fs::path& path) {
  const RunManifest m = read_manifest(path);
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::current_path();
  std::vector<std::string> problems;
  for (const auto& o : m.outputs) {
    const fs::path file = fs::path(o.path).is_absolute() ? fs::path(o.path) : dir / o.path;
    if (!fs::exists(file)) {
      problems.push_back("missing output " + o.path);
      continue;
    }
    const std::string actual = sha256_file(file);
    if (actual != o.sha256) {
      problems.push_back("checksum mismatch for " + o.path + ": recorded " + o.sha256 +
                         ", found " + actual);
    }
  }
  return problems;
}

}  // namespace symplecto::io
