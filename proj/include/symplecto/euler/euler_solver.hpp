#pragma once

// Vorticity-form integrator for dw/dt = {w, F} on T^2, where F is the
// stream Hamiltonian and w = Delta F. The state is w; F is recovered by
// the inverse Laplacian at every right-hand-side evaluation.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symplecto/errors.hpp"
#include "symplecto/spectral/spectral_field.hpp"
#include "symplecto/trig/trig_polynomial.hpp"

namespace symplecto::euler {

struct TrajectoryRecord {
  long step = 0;
  double t = 0.0;
  double L = 0.0;            // kinetic energy 1/2 int F Delta F
  std::map<int, double> I;   // Casimirs int w^k, keyed by k
  double max_vorticity = 0.0;
};

/// Non-finite state. `partial` holds every record emitted before the failure.
class DivergenceError : public Error {
 public:
  DivergenceError(long step, std::vector<TrajectoryRecord> partial = {});
  long step() const { return step_; }
  const std::vector<TrajectoryRecord>& partial() const { return partial_; }

 private:
  long step_;
  std::vector<TrajectoryRecord> partial_;
};

struct SolverConfig {
  double dt = 1e-3;
  long steps = 1000;
  spectral::GridSpec grid{128, spectral::Dealias::TwoThirds};
  long invariant_stride = 1;
  std::vector<int> casimir_orders{2, 3, 4};
  /// Receives the CFL warning; defaults to stderr when empty.
  std::function<void(const std::string&)> on_warning;
};

/// Called for every emitted record together with the state it summarises.
using RecordSink = std::function<void(const TrajectoryRecord&, const spectral::SpectralField&)>;

/// {w, Delta^{-1} w}, dealiased.
spectral::SpectralField rhs(const spectral::SpectralField& w);

/// One classical RK4 step. Throws DivergenceError(step_index) when the
/// result contains a non-finite coefficient.
spectral::SpectralField step(const spectral::SpectralField& w, double dt, long step_index = 0);

/// Vorticity Delta F0 on the grid. Throws DomainError when F0 has modes
/// outside the dealiased band.
spectral::SpectralField initial_vorticity(const trig::TrigPolynomial& f0,
                                          const spectral::GridSpec& grid);

double energy(const spectral::SpectralField& w);
/// k = 2 by Parseval, k >= 3 by grid quadrature. Throws DomainError for k < 2.
double casimir(const spectral::SpectralField& w, int k);
double max_vorticity(const spectral::SpectralField& w);
/// Largest grid speed |grad F|.
double max_velocity(const spectral::SpectralField& w);
/// dt * umax * N / (2 pi).
double cfl_number(const spectral::SpectralField& w, double dt);

TrajectoryRecord summarize(const spectral::SpectralField& w, long step, double t,
                           const std::vector<int>& casimir_orders);

/// Records at step 0 and every `invariant_stride` steps, plus the final
/// step. Throws DivergenceError carrying the partial trajectory.
std::vector<TrajectoryRecord> simulate(const trig::TrigPolynomial& f0, const SolverConfig& cfg,
                                       const RecordSink& sink = {});

}  // namespace symplecto::euler
