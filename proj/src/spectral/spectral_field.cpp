#include "symplecto/spectral/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "fft.hpp"
#include "symplecto/errors.hpp"
#include "symplecto/simd/kernels.hpp"

namespace symplecto::spectral {

namespace {

int wavenumber(int index, int n) { return index <= n / 2 ? index : index - n; }

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* op) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch(std::string(op) + ": fields live on different grids (N=" +
                       std::to_string(a.grid().n) + " vs N=" + std::to_string(b.grid().n) + ")");
  }
}

std::span<const double> as_doubles(std::span<const std::complex<double>> c) {
  return {reinterpret_cast<const double*>(c.data()), 2 * c.size()};
}

std::span<double> as_doubles(std::span<std::complex<double>> c) {
  return {reinterpret_cast<double*>(c.data()), 2 * c.size()};
}

SpectralField multiply(const SpectralField& f, const std::vector<double>& factors) {
  SpectralField out(f.grid());
  simd::mul(f.raw(), factors, out.raw());
  return out;
}

}  // namespace

GridSpec::GridSpec(int n_, Dealias dealias_) : n(n_), dealias(dealias_) {
  if (n < 16 || n % 2 != 0) {
    throw DomainError("GridSpec: resolution must be even and >= 16, got " + std::to_string(n));
  }
}

int GridSpec::band_limit() const { return dealias == Dealias::TwoThirds ? n / 3 : n / 2 - 1; }

bool GridSpec::in_band(int kx, int ky) const {
  return std::max(std::abs(kx), std::abs(ky)) <= band_limit();
}

std::shared_ptr<const SpectralTables> tables_for(const GridSpec& grid) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SpectralTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{grid.n, static_cast<int>(grid.dealias)}];
  if (slot) return slot;

  auto t = std::make_shared<SpectralTables>();
  const std::size_t size = 2 * grid.spectrum_size();
  for (auto* v : {&t->ddx, &t->ddy, &t->laplace, &t->inv_laplace, &t->band_mask, &t->parseval,
                  &t->parseval_inv_laplace}) {
    v->assign(size, 0.0);
  }
  const int n = grid.n;
  const int cols = grid.columns();
  for (int ix = 0; ix < n; ++ix) {
    const int kx = wavenumber(ix, n);
    for (int iy = 0; iy < cols; ++iy) {
      const int ky = iy;
      const std::size_t k = 2 * (static_cast<std::size_t>(ix) * cols + iy);
      const bool nyquist = ix == n / 2 || iy == n / 2;
      const double lap = static_cast<double>(kx) * kx + static_cast<double>(ky) * ky;
      const double dx = nyquist ? 0.0 : kx;
      const double dy = nyquist ? 0.0 : ky;
      const double inv = lap == 0.0 ? 0.0 : 1.0 / lap;
      const bool keep = (ix != 0 || iy != 0) &&
                        (grid.dealias == Dealias::None || grid.in_band(kx, ky));
      const double weight = (iy == 0 || iy == n / 2) ? 1.0 : 2.0;
      t->ddx[k] = -dx;
      t->ddx[k + 1] = dx;
      t->ddy[k] = -dy;
      t->ddy[k + 1] = dy;
      t->laplace[k] = t->laplace[k + 1] = lap;
      t->inv_laplace[k] = t->inv_laplace[k + 1] = inv;
      t->band_mask[k] = t->band_mask[k + 1] = keep ? 1.0 : 0.0;
      t->parseval[k] = t->parseval[k + 1] = weight;
      t->parseval_inv_laplace[k] = t->parseval_inv_laplace[k + 1] = weight * inv;
    }
  }
  slot = std::move(t);
  return slot;
}

SpectralField::SpectralField(GridSpec grid) : grid_(grid), coeffs_(grid.spectrum_size()) {}

std::span<const double> SpectralField::raw() const { return as_doubles(std::span(coeffs_)); }
std::span<double> SpectralField::raw() { return as_doubles(std::span(coeffs_)); }

SpectralField SpectralField::from_grid(GridSpec grid, std::span<const double> values) {
  if (values.size() != grid.grid_size()) {
    throw GridMismatch("SpectralField::from_grid: expected " + std::to_string(grid.grid_size()) +
                       " samples, got " + std::to_string(values.size()));
  }
  SpectralField f(grid);
  detail::plan_for(grid.n)->forward(values.data(), f.coeffs_.data());
  const double scale = 1.0 / static_cast<double>(grid.grid_size());
  for (auto& c : f.coeffs_) c *= scale;
  f.coeffs_[0] = 0.0;

  // Columns m = 0 and m = N/2 contain both (n, m) and (-n, -m).
  const int n = grid.n;
  for (int iy : {0, n / 2}) {
    for (int ix = 0; ix <= n / 2; ++ix) {
      const int jx = (n - ix) % n;
      auto& a = f.coeffs_[f.index(ix, iy)];
      auto& b = f.coeffs_[f.index(jx, iy)];
      if (ix == jx) {
        a = {a.real(), 0.0};
      } else {
        const std::complex<double> avg = 0.5 * (a + std::conj(b));
        a = avg;
        b = std::conj(avg);
      }
    }
  }
  return f;
}

SpectralField SpectralField::from_trig(GridSpec grid, const trig::TrigPolynomial& f) {
  if (f.q() != 1) {
    throw DimensionMismatch("SpectralField::from_trig: only q = 1 polynomials live on T^2");
  }
  SpectralField out(grid);
  for (const auto& [mode, c] : f.terms()) {
    if (mode.is_constant()) {
      throw DomainError("SpectralField::from_trig: constant term is not a zero-mean function");
    }
    const int kx = mode.n[0];
    const int ky = mode.m[0];
    if (std::abs(kx) >= grid.n / 2 || std::abs(ky) >= grid.n / 2) {
      throw DomainError("SpectralField::from_trig: mode (" + std::to_string(kx) + "," +
                        std::to_string(ky) + ") is not resolved on an N=" +
                        std::to_string(grid.n) + " grid");
    }
    // cos t = (e^{it} + e^{-it}) / 2, sin t = (e^{it} - e^{-it}) / 2i
    const std::complex<double> value =
        mode.phase == trig::Phase::Cos ? std::complex<double>(0.5 * c, 0.0)
                                       : std::complex<double>(0.0, -0.5 * c);
    out.set_coeff(kx, ky, out.coeff(kx, ky) + value);
  }
  return out;
}

std::vector<double> SpectralField::to_grid() const {
  std::vector<std::complex<double>> scratch = coeffs_;
  std::vector<double> values(grid_.grid_size());
  detail::plan_for(grid_.n)->inverse(scratch.data(), values.data());
  return values;
}

trig::TrigPolynomial SpectralField::to_trig(double tol) const {
  trig::TrigPolynomial out(1);
  const int n = grid_.n;
  for (int ix = 0; ix < n; ++ix) {
    const int kx = wavenumber(ix, n);
    for (int iy = 0; iy < grid_.columns(); ++iy) {
      const int ky = iy;
      // Visit each conjugate pair once: skip the redundant half of the
      // self-conjugate columns.
      if ((iy == 0 || iy == n / 2) && kx < 0) continue;
      if (kx == 0 && ky == 0) continue;
      const std::complex<double> c = coeffs_[index(ix, iy)];
      // c e^{it} + conj(c) e^{-it} = 2 Re(c) cos t - 2 Im(c) sin t
      const bool self_conjugate = (iy == 0 || iy == n / 2) && (ix == 0 || ix == n / 2);
      const double w = self_conjugate ? 1.0 : 2.0;
      if (std::abs(c.real()) * w >= tol) {
        out.add(trig::TrigMode{{kx}, {ky}, trig::Phase::Cos}, w * c.real());
      }
      if (!self_conjugate && std::abs(c.imag()) * w >= tol) {
        out.add(trig::TrigMode{{kx}, {ky}, trig::Phase::Sin}, -w * c.imag());
      }
    }
  }
  return out;
}

std::complex<double> SpectralField::coeff(int kx, int ky) const {
  const int n = grid_.n;
  if (std::abs(kx) > n / 2 || std::abs(ky) > n / 2) return 0.0;
  if (ky < 0) return std::conj(coeff(-kx, -ky));
  const int ix = ((kx % n) + n) % n;
  return coeffs_[index(ix, ky)];
}

void SpectralField::set_coeff(int kx, int ky, std::complex<double> value) {
  const int n = grid_.n;
  if (std::abs(kx) > n / 2 || std::abs(ky) > n / 2) {
    throw DomainError("SpectralField::set_coeff: wavevector outside the grid");
  }
  if (ky < 0) {
    set_coeff(-kx, -ky, std::conj(value));
    return;
  }
  const int ix = ((kx % n) + n) % n;
  coeffs_[index(ix, ky)] = value;
  if (ky == 0 || ky == n / 2) {
    const int jx = (n - ix) % n;
    if (jx == ix) {
      coeffs_[index(ix, ky)] = {value.real(), 0.0};
    } else {
      coeffs_[index(jx, ky)] = std::conj(value);
    }
  }
}

double SpectralField::hermitian_defect() const {
  const int n = grid_.n;
  double r = 0.0;
  for (int iy : {0, n / 2}) {
    for (int ix = 0; ix < n; ++ix) {
      const int jx = (n - ix) % n;
      r = std::max(r, std::abs(coeffs_[index(ix, iy)] - std::conj(coeffs_[index(jx, iy)])));
    }
  }
  return r;
}

double SpectralField::max_abs_coeff() const {
  double r = 0.0;
  for (const auto& c : coeffs_) r = std::max(r, std::abs(c));
  return r;
}

bool SpectralField::all_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const std::complex<double>& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

void SpectralField::apply_band_mask() {
  const auto tables = tables_for(grid_);
  simd::mul(raw(), tables->band_mask, raw());
}

SpectralField ddx(const SpectralField& f) {
  SpectralField out(f.grid());
  simd::swap_mul(f.raw(), tables_for(f.grid())->ddx, out.raw());
  return out;
}

SpectralField ddy(const SpectralField& f) {
  SpectralField out(f.grid());
  simd::swap_mul(f.raw(), tables_for(f.grid())->ddy, out.raw());
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  return multiply(f, tables_for(f.grid())->laplace);
}

SpectralField inverse_laplacian(const SpectralField& f) {
  return multiply(f, tables_for(f.grid())->inv_laplace);
}

SpectralField bracket(const SpectralField& f, const SpectralField& h) {
  require_same_grid(f, h, "spectral::bracket");
  const GridSpec& grid = f.grid();
  const auto fx = ddx(f).to_grid();
  const auto fy = ddy(f).to_grid();
  const auto hx = ddx(h).to_grid();
  const auto hy = ddy(h).to_grid();
  std::vector<double> product(grid.grid_size());
  simd::diff_product(fy, hx, fx, hy, product);
  SpectralField out = SpectralField::from_grid(grid, product);
  out.apply_band_mask();
  return out;
}

double integrate(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f, g, "spectral::integrate");
  const double two_pi = 2.0 * M_PI;
  return two_pi * two_pi * simd::weighted_dot(f.raw(), g.raw(), tables_for(f.grid())->parseval);
}

}  // namespace symplecto::spectral
