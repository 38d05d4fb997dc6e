#pragma once

// Seeded random inputs for property checks. All generators draw from a
// caller-owned std::mt19937_64, so a seed fixes every sample.

#include <random>
#include <vector>

#include "symplecto/curvature/curvature.hpp"
#include "symplecto/trig/trig_polynomial.hpp"

namespace symplecto::verify {

using Rng = std::mt19937_64;

enum class Coefficients {
  Dyadic,  // k/8, k in [-8, 8] \ {0}: sums and integer products stay exact
  Real,    // uniform in [-1, 1]
};

int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

/// 1..max_modes distinct nonconstant modes with entries in [-w, w].
trig::TrigPolynomial random_trig(Rng& rng, int q, int max_modes, int w,
                                 Coefficients kind = Coefficients::Real);

/// cos/cos pair with entries in [-w, w] and nonzero wavevectors; resonant
/// pairs are redrawn when `allow_resonant` is false.
curvature::ModePair random_mode_pair(Rng& rng, int q, int w, bool allow_resonant);

/// Combination of modes sharing one Laplace eigenvalue, drawn from the
/// eigenvalues with at least one wavevector of entries in [-w, w] (q = 1).
trig::TrigPolynomial random_eigenfunction(Rng& rng, int w, int max_modes);
trig::TrigPolynomial random_eigenfunction(Rng& rng, int w, int max_modes, long eigenvalue);

/// All canonical q = 1 wavevectors with entries in [-w, w] and |v|^2 = lambda.
std::vector<std::pair<int, int>> wavevectors_with_eigenvalue(long lambda, int w);

}  // namespace symplecto::verify
