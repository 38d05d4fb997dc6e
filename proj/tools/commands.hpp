#pragma once

#include <CLI11.hpp>
#include <json.hpp>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplecto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitDiverged = 4;

/// Bad command-line input detected after parsing; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  int argc = 0;
  const char* const* argv = nullptr;
};

/// Default directory for output files: $SYMPLECTO_OUTPUT_DIR or ".".
std::filesystem::path output_dir();
/// Resolves a user path against output_dir() when it is relative.
std::filesystem::path resolve_output(const std::string& path);

/// Writes `content` to `out` (and its manifest) or to stdout when `out` is empty.
void emit(const std::string& content, const std::string& out, const Invocation& inv,
          const std::string& config_json);

std::vector<int> parse_int_list(const std::string& text, const char* what);

// Each registrar adds a subcommand and stores the action to run when it is chosen.
using Action = std::function<int()>;
void add_curvature(CLI::App& app, const Invocation& inv, Action& action);
void add_simulate(CLI::App& app, const Invocation& inv, Action& action);
void add_sphere(CLI::App& app, const Invocation& inv, Action& action);
void add_verify(CLI::App& app, const Invocation& inv, Action& action);

}  // namespace symplecto::cli
