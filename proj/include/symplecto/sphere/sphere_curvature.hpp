#pragma once

// Right-invariant sectional curvature on the plane spanned by two real
// harmonics of the unit sphere, from the bracket's harmonic expansion.

#include <vector>

#include "symplecto/curvature/curvature.hpp"
#include "symplecto/sphere/harmonics.hpp"

namespace symplecto::sphere {

struct ConvergenceRow {
  int cutoff = 0;         // highest bracket degree included
  double K = 0.0;         // curvature from the truncated expansion
  double residual = 0.0;  // |{F,H}|^2 not captured by degrees <= cutoff
};

struct SphereCurvature {
  curvature::CurvatureReport report;
  std::vector<ConvergenceRow> convergence;  // cutoff = 1, 2, ..., requested
};

/// Bracket of the real harmonics R_a, R_b expanded over degrees <= cutoff,
/// with coefficients from structure_constant() and |{F,H}|^2 by quadrature.
curvature::EigenPairExpansion sphere_structure_expansion(SphericalIndex a, SphericalIndex b,
                                                         int cutoff);

/// Throws DomainError for degree-0 inputs, DegeneratePlane for identical
/// inputs, and IncompleteBasis
/// when `cutoff` misses part of the bracket (the bracket has degree
/// a.l + b.l - 1).
SphereCurvature k_sphere(SphericalIndex a, SphericalIndex b, int cutoff);

}  // namespace symplecto::sphere
