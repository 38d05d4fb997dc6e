#include "symplecto/euler/euler_solver.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "symplecto/simd/kernels.hpp"

namespace symplecto::euler {

using spectral::SpectralField;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// out = w + a * k
SpectralField shifted(const SpectralField& w, double a, const SpectralField& k) {
  SpectralField out(w.grid());
  simd::axpby(1.0, w.raw(), a, k.raw(), out.raw());
  return out;
}

void validate(const SolverConfig& cfg) {
  if (!(cfg.dt >= 0.0) || !std::isfinite(cfg.dt)) throw DomainError("SolverConfig: dt must be >= 0");
  if (cfg.steps < 0) throw DomainError("SolverConfig: steps must be >= 0");
  if (cfg.invariant_stride < 1) throw DomainError("SolverConfig: invariant_stride must be >= 1");
  for (int k : cfg.casimir_orders) {
    if (k < 2) throw DomainError("SolverConfig: Casimir orders start at 2, got " + std::to_string(k));
  }
}

}  // namespace

DivergenceError::DivergenceError(long step, std::vector<TrajectoryRecord> partial)
    : Error("Euler solver diverged: non-finite vorticity after step " + std::to_string(step)),
      step_(step),
      partial_(std::move(partial)) {}

SpectralField rhs(const SpectralField& w) {
  return spectral::bracket(w, spectral::inverse_laplacian(w));
}

SpectralField step(const SpectralField& w, double dt, long step_index) {
  if (dt == 0.0) return w;
  const SpectralField k1 = rhs(w);
  const SpectralField k2 = rhs(shifted(w, 0.5 * dt, k1));
  const SpectralField k3 = rhs(shifted(w, 0.5 * dt, k2));
  const SpectralField k4 = rhs(shifted(w, dt, k3));

  SpectralField sum(w.grid());
  simd::axpby(1.0, k1.raw(), 2.0, k2.raw(), sum.raw());
  simd::axpby(1.0, sum.raw(), 2.0, k3.raw(), sum.raw());
  simd::axpby(1.0, sum.raw(), 1.0, k4.raw(), sum.raw());
  SpectralField out = shifted(w, dt / 6.0, sum);
  if (!out.all_finite()) throw DivergenceError(step_index);
  return out;
}

SpectralField initial_vorticity(const trig::TrigPolynomial& f0, const spectral::GridSpec& grid) {
  for (const auto& [mode, c] : f0.terms()) {
    if (!mode.n.empty() && !grid.in_band(mode.n[0], mode.m[0])) {
      throw DomainError("initial Hamiltonian has mode (" + std::to_string(mode.n[0]) + "," +
                        std::to_string(mode.m[0]) + ") outside the band |k| <= " +
                        std::to_string(grid.band_limit()) + " of an N=" +
                        std::to_string(grid.n) + " grid");
    }
  }
  return spectral::laplacian(SpectralField::from_trig(grid, f0));
}

double energy(const SpectralField& w) {
  const auto tables = spectral::tables_for(w.grid());
  return 0.5 * kTwoPi * kTwoPi * simd::weighted_dot(w.raw(), w.raw(), tables->parseval_inv_laplace);
}

double casimir(const SpectralField& w, int k) {
  if (k < 2) throw DomainError("casimir: order must be >= 2");
  if (k == 2) {
    const auto tables = spectral::tables_for(w.grid());
    return kTwoPi * kTwoPi * simd::weighted_dot(w.raw(), w.raw(), tables->parseval);
  }
  const auto grid = w.to_grid();
  const double cell = kTwoPi / w.grid().n;
  return cell * cell * simd::power_sum(grid, k);
}

double max_vorticity(const SpectralField& w) { return simd::max_abs(w.to_grid()); }

double max_velocity(const SpectralField& w) {
  const SpectralField f = spectral::inverse_laplacian(w);
  const auto u = spectral::ddy(f).to_grid();
  const auto v = spectral::ddx(f).to_grid();
  double r = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) r = std::max(r, std::hypot(u[i], v[i]));
  return r;
}

double cfl_number(const SpectralField& w, double dt) {
  return dt * max_velocity(w) * w.grid().n / kTwoPi;
}

TrajectoryRecord summarize(const SpectralField& w, long step, double t,
                           const std::vector<int>& casimir_orders) {
  TrajectoryRecord r;
  r.step = step;
  r.t = t;
  r.L = energy(w);
  for (int k : casimir_orders) r.I[k] = casimir(w, k);
  r.max_vorticity = max_vorticity(w);
  return r;
}

std::vector<TrajectoryRecord> simulate(const trig::TrigPolynomial& f0, const SolverConfig& cfg,
                                       const RecordSink& sink) {
  validate(cfg);
  SpectralField w = initial_vorticity(f0, cfg.grid);

  const double cfl = cfl_number(w, cfg.dt);
  if (cfl >= 0.5) {
    const std::string msg = "CFL number " + std::to_string(cfl) + " >= 0.5 (dt=" +
                            std::to_string(cfg.dt) + ", N=" + std::to_string(cfg.grid.n) + ")";
    if (cfg.on_warning) {
      cfg.on_warning(msg);
    } else {
      std::cerr << "warning: " << msg << '\n';
    }
  }

  std::vector<TrajectoryRecord> records;
  auto emit = [&](long s) {
    records.push_back(summarize(w, s, static_cast<double>(s) * cfg.dt, cfg.casimir_orders));
    if (sink) sink(records.back(), w);
  };

  emit(0);
  for (long s = 1; s <= cfg.steps; ++s) {
    try {
      w = step(w, cfg.dt, s);
    } catch (const DivergenceError&) {
      throw DivergenceError(s, std::move(records));
    }
    if (s % cfg.invariant_stride == 0 || s == cfg.steps) emit(s);
  }
  return records;
}

}  // namespace symplecto::euler
