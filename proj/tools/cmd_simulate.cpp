#include <cstdio>
#include <iostream>

#include "commands.hpp"
#include "symplecto/euler/euler_solver.hpp"
#include "symplecto/io/manifest.hpp"
#include "symplecto/io/serialization.hpp"

namespace symplecto::cli {

namespace {

struct Options {
  std::string init, out = "trajectory.csv", casimirs = "2,3,4", dealias = "two-thirds";
  int grid = 128;
  double dt = 1e-3;
  long steps = 1000;
  long stride = 10;
  long snapshot_stride = 0;
};

// Perturbed Taylor-Green cell: the unperturbed cos x + cos y is stationary.
trig::TrigPolynomial default_initial() {
  return trig::TrigPolynomial::cos1(1, 0) + trig::TrigPolynomial::cos1(0, 1) +
         trig::TrigPolynomial::cos1(2, 1, 0.1);
}

std::string snapshot_csv(const spectral::SpectralField& w) {
  io::CsvWriter csv({"n", "m", "re", "im"});
  const int n = w.grid().n;
  for (int kx = -n / 2 + 1; kx <= n / 2; ++kx) {
    for (int ky = 0; ky <= n / 2; ++ky) {
      const auto c = w.coeff(kx, ky);
      if (c == 0.0) continue;
      csv.add_row({std::to_string(kx), std::to_string(ky), io::format_double(c.real()),
                   io::format_double(c.imag())});
    }
  }
  return csv.str();
}

int run(const Options& opt, const Invocation& inv) {
  euler::SolverConfig cfg;
  try {
    cfg.grid = spectral::GridSpec(opt.grid, opt.dealias == "none" ? spectral::Dealias::None
                                                                  : spectral::Dealias::TwoThirds);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  cfg.dt = opt.dt;
  cfg.steps = opt.steps;
  cfg.invariant_stride = opt.stride;
  cfg.casimir_orders = parse_int_list(opt.casimirs, "--casimirs");
  cfg.on_warning = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };

  const trig::TrigPolynomial f0 = opt.init.empty() ? default_initial() : io::load_trig_json(opt.init);

  const auto out_path = resolve_output(opt.out);
  const auto out_dir = out_path.has_parent_path() ? out_path.parent_path() : output_dir();
  const auto manifest_path = std::filesystem::path(out_path.string() + ".manifest.json");
  io::RunManifest manifest = io::make_manifest(inv.argc, inv.argv);
  manifest.config = {{"command", "simulate"}, {"init", opt.init.empty() ? "default" : opt.init},
                     {"initial_hamiltonian", nlohmann::json::parse(io::to_trig_json(f0))},
                     {"grid", opt.grid}, {"dealias", opt.dealias}, {"dt", opt.dt},
                     {"steps", opt.steps}, {"stride", opt.stride}, {"casimirs", cfg.casimir_orders},
                     {"snapshot_stride", opt.snapshot_stride}};

  std::vector<std::string> header{"t", "L"};
  for (int k : cfg.casimir_orders) header.push_back("I" + std::to_string(k));
  header.push_back("max_vorticity");
  io::CsvWriter csv(header);

  auto sink = [&](const euler::TrajectoryRecord& r, const spectral::SpectralField& w) {
    std::vector<std::string> cells{io::format_double(r.t), io::format_double(r.L)};
    for (int k : cfg.casimir_orders) cells.push_back(io::format_double(r.I.at(k)));
    cells.push_back(io::format_double(r.max_vorticity));
    csv.add_row(std::move(cells));
    if (opt.snapshot_stride > 0 && r.step % opt.snapshot_stride == 0) {
      char name[64];
      std::snprintf(name, sizeof name, "snapshots/step_%08ld.csv", r.step);
      const auto path = out_dir / (out_path.stem().string() + "_" + name);
      io::write_text_file(path, snapshot_csv(w));
      manifest.add_output(path, manifest_path.parent_path());
    }
  };

  auto finish = [&] {
    io::write_text_file(out_path, csv.str());
    manifest.add_output(out_path, manifest_path.parent_path());
    io::write_manifest(manifest, manifest_path);
    std::cerr << "wrote " << out_path.string() << " (" << csv.rows() << " records, manifest "
              << manifest_path.string() << ")\n";
  };

  try {
    euler::simulate(f0, cfg, sink);
  } catch (const euler::DivergenceError&) {
    finish();  // keep the partial trajectory
    throw;
  }
  finish();
  return kExitOk;
}

}  // namespace

void add_simulate(CLI::App& app, const Invocation& inv, Action& action) {
  auto opt = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("simulate", "Integrate the vorticity equation on T^2 with RK4");
  cmd->add_option("--init", opt->init, "initial Hamiltonian F0 as JSON (default: perturbed "
                                       "Taylor-Green cos x + cos y + 0.1 cos(2x+y))")
      ->check(CLI::ExistingFile);
  cmd->add_option("--grid", opt->grid, "grid points per axis (even, >= 16)");
  cmd->add_option("--dealias", opt->dealias, "two-thirds or none")
      ->check(CLI::IsMember({"two-thirds", "none"}));
  cmd->add_option("--dt", opt->dt, "time step")->check(CLI::NonNegativeNumber);
  cmd->add_option("--steps", opt->steps, "number of steps")->check(CLI::NonNegativeNumber);
  cmd->add_option("--stride", opt->stride, "steps between trajectory records")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--casimirs", opt->casimirs, "Casimir orders, e.g. 2,3,4");
  cmd->add_option("--snapshot-stride", opt->snapshot_stride,
                  "steps between coefficient dumps (0 = none)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", opt->out, "trajectory CSV (relative to $SYMPLECTO_OUTPUT_DIR)");
  cmd->callback([opt, &action, inv] { action = [opt, inv] { return run(*opt, inv); }; });
}

}  // namespace symplecto::cli
