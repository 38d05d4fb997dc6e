#pragma once

// Structure constants of the Poisson algebra of S^2 in the harmonic basis:
//
//   {Y_nm, Y_kl} = sum_{i,j} C^{ij}_{nm,kl} Y_ij,
//
// with the bracket H_z F_phi - H_phi F_z and Y as in harmonics.hpp. Only
// j = m + l and |n - k| < i < n + k with n + k + i odd can be nonzero; every
// nonzero C is purely imaginary.
//
// Two closed forms are provided. The double-sum form couples each harmonic
// to lower degrees of the other through (2p+1)-step ladders; it holds when
// m l >= 0. The gradient-coupling form
//
//   C = i (-1)^j sqrt(n(n+1) k(k+1)) sqrt((2n+1)(2k+1)(2i+1) / 4 pi)
//       (n k i; m l -j) (n k i; 1 -1 0)
//
// holds for all orders. structure_constant() uses the double sum where it
// is valid and the gradient coupling otherwise; the quadrature check in
// validate_table() covers both.

#include <array>
#include <complex>
#include <map>
#include <utility>

#include "symplecto/sphere/harmonics.hpp"

namespace symplecto::sphere {

std::complex<double> double_sum_constant(int n, int m, int k, int l, int i, int j);
std::complex<double> gradient_coupling_constant(int n, int m, int k, int l, int i, int j);
std::complex<double> structure_constant(int n, int m, int k, int l, int i, int j);

struct StructureConstantTable {
  int lmax = 0;
  /// (n, m, k, l) -> (i, j) -> C; absent entries are zero.
  std::map<std::array<int, 4>, std::map<std::pair<int, int>, std::complex<double>>> entries;

  std::complex<double> at(int n, int m, int k, int l, int i, int j) const;
  /// max |C_{nm,kl} + C_{kl,nm}|
  double antisymmetry_defect() const;
  std::size_t nonzero_count() const;
};

struct TableValidation {
  double max_projection_error = 0.0;  // table vs <{Y_nm, Y_kl}, Y_ij>
  double max_pointwise_error = 0.0;   // table expansion vs sampled bracket
  double max_coverage_residual = 0.0; // |{Y,Y}|^2 minus its projections onto i < n+k
  std::size_t pairs_checked = 0;
};

/// Quadrature cross-check of every (n,m,k,l) in the table. Throws
/// FormulaTranscriptionError when any error exceeds `tolerance`.
TableValidation validate_table(const StructureConstantTable& table, double tolerance = 1e-6);

/// All n, k in 1..lmax (degree 0 brackets vanish). The build runs on
/// `threads` workers (0 = hardware concurrency) and is validated by
/// quadrature unless `validate` is false.
StructureConstantTable structure_constants(int lmax, bool validate = true, unsigned threads = 0);

}  // namespace symplecto::sphere
