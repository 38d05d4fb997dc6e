#pragma once

// Independent numerical paths used to cross-check the exact algebra: grid
// finite differences and Riemann sums on T^2, a direct-summation DFT, and
// sphere quadrature of the eigenfunction curvature integrals. None of these
// share code with the spectral or symbolic implementations they check.

#include <complex>
#include <vector>

#include "symplecto/sphere/harmonics.hpp"
#include "symplecto/trig/trig_polynomial.hpp"

namespace symplecto::validation {

/// Samples f (q = 1) at x_i = 2 pi i / n, y_j = 2 pi j / n, row-major in i.
std::vector<double> sample_grid(const trig::TrigPolynomial& f, int n);

/// Eighth-order centred differences on the periodic grid.
std::vector<double> fd_ddx(const std::vector<double>& g, int n);
std::vector<double> fd_ddy(const std::vector<double>& g, int n);
/// f_y h_x - f_x h_y from finite differences of the samples.
std::vector<double> fd_bracket(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h, int n);
/// -(f_xx + f_yy) from repeated finite differences.
std::vector<double> fd_laplacian(const trig::TrigPolynomial& f, int n);

/// Riemann sum (2 pi / n)^2 sum g_ij; exact for trigonometric polynomials
/// of degree below n.
double grid_integral(const std::vector<double>& g, int n);

/// int grad F . grad H over T^2, gradients evaluated pointwise from sin/cos.
double grid_metric(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h, int n);
/// 1/4 int {F,H}^2 over T^2, bracket evaluated pointwise from sin/cos.
double grid_bracket_energy(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h, int n);

/// Coefficient of exp(i(kx x + ky y)) by direct O(n^2) summation.
std::complex<double> direct_dft(const std::vector<double>& g, int n, int kx, int ky);

/// Right-invariant curvature of the plane (R_a, R_b) on the unit sphere:
/// the three-term eigenfunction integrals evaluated by quadrature, with
/// int P Delta P as int |grad P|^2 and Delta^{-1} P by harmonic projection.
double sphere_curvature_quadrature(sphere::SphericalIndex a, sphere::SphericalIndex b);

}  // namespace symplecto::validation
