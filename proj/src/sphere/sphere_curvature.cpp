#include "symplecto/sphere/sphere_curvature.hpp"

#include <cmath>
#include <string>

#include "symplecto/errors.hpp"
#include "symplecto/sphere/structure_constants.hpp"

namespace symplecto::sphere {

namespace {

void validate_pair(SphericalIndex a, SphericalIndex b) {
  if (a.l < 1 || b.l < 1) {
    throw DomainError("k_sphere: degree-0 harmonics are constant and span no direction");
  }
  if (a == b) {
    throw DegeneratePlane("k_sphere: (" + std::to_string(a.l) + "," + std::to_string(a.m) +
                          ") given twice");
  }
}

// Per-degree squared norms of the bracket's coefficients, degrees 0..cutoff.
std::vector<double> degree_weights(SphericalIndex a, SphericalIndex b, int cutoff) {
  std::vector<double> w(cutoff + 1, 0.0);
  const auto ua = real_to_complex(a);
  const auto ub = real_to_complex(b);
  for (int i = 0; i <= cutoff; ++i) {
    for (int j = -i; j <= i; ++j) {
      std::complex<double> c = 0.0;
      for (const auto& [ia, ca] : ua) {
        for (const auto& [ib, cb] : ub) {
          c += ca * cb * structure_constant(ia.l, ia.m, ib.l, ib.m, i, j);
        }
      }
      // Real harmonics of degree i are a unitary recombination of the Y_ij.
      w[i] += std::norm(c);
    }
  }
  return w;
}

double bracket_norm_sq(SphericalIndex a, SphericalIndex b) {
  const SphereQuadrature quad = SphereQuadrature::for_degree(2 * (a.l + b.l));
  const auto sq = quad.sample([&](double z, double phi) {
    const double p = bracket(real_harmonic_jet(a, z, phi), real_harmonic_jet(b, z, phi));
    return p * p;
  });
  return quad.integrate<double>(sq);
}

}  // namespace

curvature::EigenPairExpansion sphere_structure_expansion(SphericalIndex a, SphericalIndex b,
                                                         int cutoff) {
  validate_pair(a, b);
  if (cutoff < 0) throw DomainError("k_sphere: cutoff must be >= 0");
  curvature::EigenPairExpansion e;
  e.alpha = a.eigenvalue();
  e.beta = b.eigenvalue();
  const auto w = degree_weights(a, b, cutoff);
  for (int i = 1; i <= cutoff; ++i) {
    if (w[i] > 0.0) e.terms.push_back({SphericalIndex(i, 0).eigenvalue(), std::sqrt(w[i])});
  }
  e.bracket_norm_sq = bracket_norm_sq(a, b);
  return e;
}

SphereCurvature k_sphere(SphericalIndex a, SphericalIndex b, int cutoff) {
  const curvature::EigenPairExpansion full = sphere_structure_expansion(a, b, cutoff);
  SphereCurvature out;
  for (int c = 1; c <= cutoff; ++c) {
    curvature::EigenPairExpansion partial = full;
    partial.terms.clear();
    double covered = 0.0;
    for (const auto& t : full.terms) {
      if (t.lambda <= c * (c + 1.0)) {
        partial.terms.push_back(t);
        covered += t.coeff * t.coeff;
      }
    }
    // Evaluate the truncation as if it were complete to expose the trend.
    partial.bracket_norm_sq = covered;
    const double k = partial.terms.empty() ? 0.0 : curvature::k_from_structure_constants(partial).K;
    out.convergence.push_back({c, k, std::abs(full.bracket_norm_sq - covered)});
  }
  out.report = curvature::k_from_structure_constants(full);
  return out;
}

}  // namespace symplecto::sphere
