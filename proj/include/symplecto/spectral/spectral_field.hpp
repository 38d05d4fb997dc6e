#pragma once

// Truncated Fourier representation of real zero-mean functions on T^2.
//
// A field is f(x, y) = sum_{n,m} c(n, m) exp(i (n x + m y)) sampled on an
// N x N grid x_i = 2 pi i / N, y_j = 2 pi j / N (row-major, x slow). Only the
// half spectrum m >= 0 is stored, in FFTW r2c layout: N rows (x-wavenumber,
// index ix -> n = ix or ix - N) by N/2 + 1 columns (m = iy). The remaining
// coefficients follow from c(-n, -m) = conj(c(n, m)).
//
// Integrals use the measure dx dy, so the torus has volume (2 pi)^2.

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "symplecto/trig/trig_polynomial.hpp"

namespace symplecto::spectral {

enum class Dealias { None, TwoThirds };

struct GridSpec {
  int n = 64;
  Dealias dealias = Dealias::TwoThirds;

  GridSpec() = default;
  /// Throws DomainError unless n is even and >= 16.
  GridSpec(int n, Dealias dealias);

  bool operator==(const GridSpec&) const = default;

  std::size_t grid_size() const { return static_cast<std::size_t>(n) * n; }
  int columns() const { return n / 2 + 1; }
  std::size_t spectrum_size() const { return static_cast<std::size_t>(n) * columns(); }
  /// Largest |wavenumber| kept after dealiasing (N/3 or N/2 - 1).
  int band_limit() const;
  bool in_band(int kx, int ky) const;
};

class SpectralField {
 public:
  explicit SpectralField(GridSpec grid);

  /// DFT of grid samples; the mean is removed and Hermitian symmetry of the
  /// self-conjugate columns is enforced. Throws GridMismatch on size errors.
  static SpectralField from_grid(GridSpec grid, std::span<const double> values);
  /// Exact placement of a q = 1 trigonometric polynomial. Throws
  /// DimensionMismatch for q != 1, DomainError for a constant term or a mode
  /// at or beyond the Nyquist wavenumber.
  static SpectralField from_trig(GridSpec grid, const trig::TrigPolynomial& f);

  const GridSpec& grid() const { return grid_; }

  std::vector<double> to_grid() const;
  /// Reads the spectrum back as modes; coefficients below `tol` are dropped.
  trig::TrigPolynomial to_trig(double tol = 1e-13) const;

  /// Coefficient of exp(i(n x + m y)) for any sign of (n, m).
  std::complex<double> coeff(int n, int m) const;
  /// Sets c(n, m) and its conjugate partner c(-n, -m).
  void set_coeff(int n, int m, std::complex<double> value);

  std::span<const std::complex<double>> spectrum() const { return coeffs_; }
  std::span<std::complex<double>> spectrum() { return coeffs_; }
  std::span<const double> raw() const;
  std::span<double> raw();

  /// Largest violation of c(-n,-m) = conj c(n,m) within the stored half.
  double hermitian_defect() const;
  double max_abs_coeff() const;
  bool all_finite() const;

  /// Zeroes coefficients outside the dealiased band and the mean.
  void apply_band_mask();

 private:
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * grid_.columns() + iy;
  }

  GridSpec grid_;
  std::vector<std::complex<double>> coeffs_;
};

/// Per-resolution multiplier tables, shared and immutable.
struct SpectralTables {
  std::vector<double> ddx;          // (-n, n) pairs for i*n multiplication
  std::vector<double> ddy;          // (-m, m)
  std::vector<double> laplace;      // n^2 + m^2, duplicated per (re, im)
  std::vector<double> inv_laplace;  // 1 / (n^2 + m^2), 0 at the mean
  std::vector<double> band_mask;    // 1 inside the dealiased band, else 0
  std::vector<double> parseval;     // 1 on self-conjugate columns, 2 elsewhere
  std::vector<double> parseval_inv_laplace;  // parseval * inv_laplace
};
std::shared_ptr<const SpectralTables> tables_for(const GridSpec& grid);

/// Pseudo-spectral bracket df/dy dh/dx - df/dx dh/dy, evaluated on the grid
/// and dealiased. Agrees with trig::poisson_bracket when both inputs (and
/// hence the product) lie inside the dealiased band.
SpectralField bracket(const SpectralField& f, const SpectralField& h);
SpectralField laplacian(const SpectralField& f);
SpectralField inverse_laplacian(const SpectralField& f);
/// Integral of f*g over the torus via Parseval.
double integrate(const SpectralField& f, const SpectralField& g);

/// Spectral partial derivatives.
SpectralField ddx(const SpectralField& f);
SpectralField ddy(const SpectralField& f);

}  // namespace symplecto::spectral
