#include <cstdio>
#include <iostream>

#include "commands.hpp"
#include "symplecto/io/serialization.hpp"
#include "symplecto/sphere/sphere_curvature.hpp"
#include "symplecto/sphere/structure_constants.hpp"
#include "symplecto/sphere/wigner.hpp"

namespace symplecto::cli {

void add_sphere(CLI::App& app, const Invocation& inv, Action& action) {
  auto* cmd = app.add_subcommand("sphere", "Harmonic analysis on S^2");
  cmd->require_subcommand(1);

  struct Options {
    std::vector<int> wigner;
    int lmax = 2;
    bool no_validate = false;
    std::string pair, out;
  };
  auto opt = std::make_shared<Options>();

  auto* w3j = cmd->add_subcommand("wigner3j", "Wigner 3j symbol (j1 j2 j3; m1 m2 m3)");
  w3j->add_option("args", opt->wigner, "j1 j2 j3 m1 m2 m3")->required()->expected(6);
  w3j->callback([opt, &action] {
    action = [opt] {
      const auto& a = opt->wigner;
      for (int i = 0; i < 3; ++i) {
        if (a[i] < 0) throw UsageError("wigner3j: j values must be nonnegative");
      }
      std::printf("%.10f\n", sphere::wigner3j(a[0], a[1], a[2], a[3], a[4], a[5]));
      return kExitOk;
    };
  });

  auto* constants = cmd->add_subcommand("constants", "Structure constants C^{ij}_{nm,kl}");
  constants->add_option("--lmax", opt->lmax, "largest degree n, k")
      ->required()
      ->check(CLI::Range(1, 12));
  constants->add_flag("--no-validate", opt->no_validate, "skip the quadrature cross-check");
  constants->add_option("--out", opt->out, "CSV file (default: stdout)");
  constants->callback([opt, &action, inv] {
    action = [opt, inv] {
      const auto table = sphere::structure_constants(opt->lmax, false);
      if (!opt->no_validate) {
        const auto v = sphere::validate_table(table);
        std::fprintf(stderr,
                     "validated %zu pairs: projection error %.3g, pointwise error %.3g, "
                     "coverage residual %.3g\n",
                     v.pairs_checked, v.max_projection_error, v.max_pointwise_error,
                     v.max_coverage_residual);
      }
      io::CsvWriter csv({"n", "m", "k", "l", "i", "j", "re(C)", "im(C)"});
      for (const auto& [key, row] : table.entries) {
        for (const auto& [ij, c] : row) {
          csv.add_row({std::to_string(key[0]), std::to_string(key[1]), std::to_string(key[2]),
                       std::to_string(key[3]), std::to_string(ij.first), std::to_string(ij.second),
                       io::format_double(c.real()), io::format_double(c.imag())});
        }
      }
      emit(csv.str(), opt->out, inv,
           nlohmann::json{{"command", "sphere constants"}, {"lmax", opt->lmax},
                          {"validated", !opt->no_validate}}
               .dump());
      return kExitOk;
    };
  });

  auto* curv = cmd->add_subcommand("curvature", "Right-invariant K on a pair of real harmonics");
  curv->add_option("--pair", opt->pair, "l1,m1,l2,m2")->required();
  curv->add_option("--lmax", opt->lmax, "highest bracket degree kept")->required();
  curv->add_option("--out", opt->out, "CSV file (default: stdout)");
  curv->callback([opt, &action, inv] {
    action = [opt, inv] {
      const auto v = parse_int_list(opt->pair, "--pair");
      if (v.size() != 4) throw UsageError("--pair needs l1,m1,l2,m2");
      const sphere::SphericalIndex a(v[0], v[1]), b(v[2], v[3]);
      const auto result = sphere::k_sphere(a, b, opt->lmax);
      io::CsvWriter csv({"formula", "l1", "m1", "l2", "m2", "cutoff", "K", "residual"});
      for (const auto& r : result.convergence) {
        csv.add_row({curvature::formula_name(result.report.formula), std::to_string(a.l),
                     std::to_string(a.m), std::to_string(b.l), std::to_string(b.m),
                     std::to_string(r.cutoff), io::format_double(r.K),
                     io::format_double(r.residual)});
      }
      emit(csv.str(), opt->out, inv,
           nlohmann::json{{"command", "sphere curvature"}, {"pair", opt->pair},
                          {"lmax", opt->lmax}}
               .dump());
      return kExitOk;
    };
  });
}

}  // namespace symplecto::cli
