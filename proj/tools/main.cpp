#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "symplecto/errors.hpp"
#include "symplecto/euler/euler_solver.hpp"
#include "symplecto/io/manifest.hpp"
#include "symplecto/io/serialization.hpp"

namespace symplecto::cli {

std::filesystem::path output_dir() {
  const char* env = std::getenv("SYMPLECTO_OUTPUT_DIR");
  return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path(".");
}

std::filesystem::path resolve_output(const std::string& path) {
  const std::filesystem::path p(path);
  return p.is_absolute() ? p : output_dir() / p;
}

void emit(const std::string& content, const std::string& out, const Invocation& inv,
          const std::string& config_json) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  const auto path = resolve_output(out);
  io::write_text_file(path, content);
  io::RunManifest m = io::make_manifest(inv.argc, inv.argv);
  m.config = nlohmann::json::parse(config_json);
  const auto manifest_path = std::filesystem::path(path.string() + ".manifest.json");
  m.add_output(path, manifest_path.parent_path());
  io::write_manifest(m, manifest_path);
  std::cerr << "wrote " << path.string() << " (manifest " << manifest_path.string() << ")\n";
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": expected comma-separated integers, got '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace symplecto::cli

int main(int argc, char** argv) {
  using namespace symplecto;
  using namespace symplecto::cli;

  CLI::App app{"Poisson-bracket algebra, Euler flow and sectional curvature of area-preserving "
               "diffeomorphism groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SYMPLECTO_VERSION);
  const Invocation inv{argc, argv};
  Action action;
  add_curvature(app, inv, action);
  add_simulate(app, inv, action);
  add_sphere(app, inv, action);
  add_verify(app, inv, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const euler::DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const DegeneratePlane& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const SingularDenominator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const FormulaTranscriptionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    // Domain, dimension and coverage problems all stem from the arguments.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
