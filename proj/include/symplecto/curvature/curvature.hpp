#pragma once

// Sectional curvature of the group of Hamiltonian symplectomorphisms of
// T^{2q}, for the bi-invariant metric int F H and for the right-invariant
// (kinetic energy) metric int F Delta H.
//
// Every entry point accepts unnormalised Hamiltonians: the pair is
// Gram-Schmidt orthonormalised in the relevant metric first, and the raw
// squared norms are reported alongside K. A pair whose Gram determinant is
// at most 1e-12 relative to the product of the squared norms does not span
// a plane and raises DegeneratePlane.

#include <string>
#include <utility>
#include <vector>

#include "symplecto/trig/trig_polynomial.hpp"

namespace symplecto::curvature {

enum class Formula {
  BiInvariant,     // 1/4 |{F,H}|^2
  RightGeneral,    // four-integral connection formula
  RightEigen,      // three-term formula for Laplace eigenfunctions
  RightStructure,  // three-term formula from bracket expansion coefficients
  TorusBi,         // closed form for a pair of Fourier modes
  TorusRight,
};

/// Stable upper-case label used in CSV output.
const char* formula_name(Formula f);

struct CurvatureReport {
  double K = 0.0;
  Formula formula = Formula::BiInvariant;
  /// Additive contributions in evaluation order; they sum to K for every
  /// formula except the closed forms, which report their factors.
  std::vector<std::pair<std::string, double>> terms;
  double norm_f = 0.0;  // |X_F|^2 in the formula's metric, before normalisation
  double norm_h = 0.0;

  double term(const std::string& label) const;
};

double relative_gram_determinant(double ff, double hh, double fh);
inline constexpr double kDegeneratePlaneTolerance = 1e-12;

CurvatureReport k_bi(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h);
/// The same value through -1/4 <{{F,H},H}, F>, the Lie-algebraic contraction.
double k_bi_contraction(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h);

/// Hamiltonian S of the projected covariant derivative of X_H along X_F:
/// Delta S = 1/2 (Delta{F,H} + {F,Delta H} + {H,Delta F}).
trig::TrigPolynomial nabla_hamiltonian(const trig::TrigPolynomial& f,
                                       const trig::TrigPolynomial& h);
/// Hamiltonian T of the symmetrised derivative: Delta T = {F,Delta H} + {H,Delta F}.
trig::TrigPolynomial nabla_symmetric(const trig::TrigPolynomial& f,
                                     const trig::TrigPolynomial& h);

CurvatureReport k_right_general(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h);

/// Eigenvalue alpha with Delta f = alpha f, or NotEigenfunction.
double laplace_eigenvalue(const trig::TrigPolynomial& f);
CurvatureReport k_right_eigen(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h);

/// Bracket data of an L^2-orthonormal eigenfunction pair (Delta F = alpha F,
/// Delta H = beta H): {F,H} = sum_i coeff_i e_i over L^2-orthonormal
/// eigenfunctions e_i with eigenvalues lambda_i.
struct StructureTerm {
  double lambda = 0.0;
  double coeff = 0.0;
};
struct EigenPairExpansion {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<StructureTerm> terms;
  /// int {F,H}^2, computed independently of `terms`; the difference with
  /// sum coeff^2 is the coverage residual.
  double bracket_norm_sq = 0.0;
};

/// Expansion of a torus eigenfunction pair. The pair is L^2-orthonormalised
/// first. Bracket modes with eigenvalue above `max_eigenvalue` are left out
/// of `terms` (a truncated basis); pass a negative value for no cutoff.
EigenPairExpansion torus_structure_expansion(const trig::TrigPolynomial& f,
                                             const trig::TrigPolynomial& h,
                                             double max_eigenvalue = -1.0);

inline constexpr double kCoverageTolerance = 1e-10;
/// Throws IncompleteBasis when |bracket_norm_sq - sum coeff^2| exceeds
/// kCoverageTolerance * max(1, bracket_norm_sq).
CurvatureReport k_from_structure_constants(const EigenPairExpansion& e);

/// F = phase_f(n.x + m.y), H = phase_h(k.x + l.y).
struct ModePair {
  std::vector<int> n, m, k, l;
  trig::Phase phase_f = trig::Phase::Cos;
  trig::Phase phase_h = trig::Phase::Cos;

  static ModePair q1(int n, int m, int k, int l);
  int q() const { return static_cast<int>(n.size()); }
  trig::TrigPolynomial f() const;
  trig::TrigPolynomial h() const;
  /// m.k - n.l
  long cross() const;
  bool resonant() const;  // (n,m) = +-(k,l)
};

/// Throws DomainError for a zero wavevector and DegeneratePlane when both
/// entries are the same function.
CurvatureReport k_torus_bi(const ModePair& p);
/// Throws SingularDenominator for resonant pairs.
CurvatureReport k_torus_right(const ModePair& p);

}  // namespace symplecto::curvature
