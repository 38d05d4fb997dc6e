#include <iostream>

#include "commands.hpp"
#include "symplecto/io/manifest.hpp"
#include "symplecto/verify/acceptance.hpp"

namespace symplecto::cli {

void add_verify(CLI::App& app, const Invocation&, Action& action) {
  struct Options {
    bool quick = false, full = false;
    std::uint64_t seed = 42;
    std::vector<std::string> manifests;
    std::string only;
  };
  auto opt = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("verify", "Run the cross-validation suite");
  auto* quick = cmd->add_flag("--quick", opt->quick, "the ten acceptance criteria (default)");
  cmd->add_flag("--full", opt->full, "criteria plus extended checks")->excludes(quick);
  cmd->add_option("--seed", opt->seed, "seed for the randomised suites");
  cmd->add_option("--only", opt->only, "comma-separated criterion ids");
  cmd->add_option("--manifest", opt->manifests, "re-check output checksums of these manifests")
      ->check(CLI::ExistingFile);
  cmd->callback([opt, &action] {
    action = [opt] {
      bool ok = true;
      for (const auto& m : opt->manifests) {
        const auto problems = io::verify_manifest(m);
        for (const auto& p : problems) std::cout << "[FAIL] manifest " << m << ": " << p << '\n';
        if (problems.empty()) std::cout << "[PASS] manifest " << m << '\n';
        ok = ok && problems.empty();
      }
      verify::AcceptanceOptions options;
      options.seed = opt->seed;
      options.full = opt->full;
      if (!opt->only.empty()) options.only = parse_int_list(opt->only, "--only");
      options.on_result = [](const verify::CriterionResult& r) {
        std::cout << verify::format_result(r) << std::endl;
      };
      std::cout << "seed " << opt->seed << (opt->full ? ", full" : ", quick") << '\n';
      const auto results = verify::run_acceptance(options);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed ? 1 : 0;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return ok && passed == results.size() ? kExitOk : kExitFailure;
    };
  });
}

}  // namespace symplecto::cli
