#include "symplecto/validation/oracles.hpp"

#include <cmath>

#include "symplecto/errors.hpp"

namespace symplecto::validation {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Centred weights for offsets 1..4 of the eighth-order first derivative.
constexpr double kStencil[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};

void require_q1(const trig::TrigPolynomial& f, const char* where) {
  if (f.q() != 1) throw DimensionMismatch(std::string(where) + ": grid oracles need q = 1");
}

struct PointGradient {
  double fx = 0.0, fy = 0.0;
};

PointGradient gradient(const trig::TrigPolynomial& f, double x, double y) {
  PointGradient g;
  for (const auto& [mode, c] : f.terms()) {
    const double theta = mode.n[0] * x + mode.m[0] * y;
    const double d = mode.phase == trig::Phase::Cos ? -c * std::sin(theta) : c * std::cos(theta);
    g.fx += d * mode.n[0];
    g.fy += d * mode.m[0];
  }
  return g;
}

template <class F>
double grid_sum(int n, F&& f) {
  const double h = kTwoPi / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sum += f(i * h, j * h);
  }
  return sum * h * h;
}

}  // namespace

std::vector<double> sample_grid(const trig::TrigPolynomial& f, int n) {
  require_q1(f, "sample_grid");
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  const double h = kTwoPi / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x[1] = {i * h}, y[1] = {j * h};
      g[static_cast<std::size_t>(i) * n + j] = f.evaluate(x, y);
    }
  }
  return g;
}

std::vector<double> fd_ddx(const std::vector<double>& g, int n) {
  std::vector<double> d(g.size());
  const double inv_h = n / kTwoPi;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 1; k <= 4; ++k) {
        s += kStencil[k - 1] * (g[static_cast<std::size_t>((i + k) % n) * n + j] -
                                g[static_cast<std::size_t>((i - k + n) % n) * n + j]);
      }
      d[static_cast<std::size_t>(i) * n + j] = s * inv_h;
    }
  }
  return d;
}

std::vector<double> fd_ddy(const std::vector<double>& g, int n) {
  std::vector<double> d(g.size());
  const double inv_h = n / kTwoPi;
  for (int i = 0; i < n; ++i) {
    const std::size_t row = static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 1; k <= 4; ++k) {
        s += kStencil[k - 1] * (g[row + (j + k) % n] - g[row + (j - k + n) % n]);
      }
      d[row + j] = s * inv_h;
    }
  }
  return d;
}

std::vector<double> fd_bracket(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h,
                               int n) {
  const auto gf = sample_grid(f, n);
  const auto gh = sample_grid(h, n);
  const auto fx = fd_ddx(gf, n), fy = fd_ddy(gf, n);
  const auto hx = fd_ddx(gh, n), hy = fd_ddy(gh, n);
  std::vector<double> out(gf.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = fy[k] * hx[k] - fx[k] * hy[k];
  return out;
}

std::vector<double> fd_laplacian(const trig::TrigPolynomial& f, int n) {
  const auto g = sample_grid(f, n);
  const auto xx = fd_ddx(fd_ddx(g, n), n);
  const auto yy = fd_ddy(fd_ddy(g, n), n);
  std::vector<double> out(g.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -(xx[k] + yy[k]);
  return out;
}

double grid_integral(const std::vector<double>& g, int n) {
  double sum = 0.0;
  for (double v : g) sum += v;
  const double h = kTwoPi / n;
  return sum * h * h;
}

double grid_metric(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h, int n) {
  require_q1(f, "grid_metric");
  require_q1(h, "grid_metric");
  return grid_sum(n, [&](double x, double y) {
    const auto a = gradient(f, x, y);
    const auto b = gradient(h, x, y);
    return a.fx * b.fx + a.fy * b.fy;
  });
}

double grid_bracket_energy(const trig::TrigPolynomial& f, const trig::TrigPolynomial& h, int n) {
  require_q1(f, "grid_bracket_energy");
  require_q1(h, "grid_bracket_energy");
  return 0.25 * grid_sum(n, [&](double x, double y) {
    const auto a = gradient(f, x, y);
    const auto b = gradient(h, x, y);
    const double p = a.fy * b.fx - a.fx * b.fy;
    return p * p;
  });
}

std::complex<double> direct_dft(const std::vector<double>& g, int n, int kx, int ky) {
  std::complex<double> sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double theta = -kTwoPi * (static_cast<double>(kx) * i + static_cast<double>(ky) * j) / n;
      sum += g[static_cast<std::size_t>(i) * n + j] * std::complex<double>(std::cos(theta), std::sin(theta));
    }
  }
  return sum / (static_cast<double>(n) * n);
}

double sphere_curvature_quadrature(sphere::SphericalIndex a, sphere::SphericalIndex b) {
  using namespace sphere;
  const double alpha = a.eigenvalue();
  const double beta = b.eigenvalue();
  const int degree = a.l + b.l;
  const SphereQuadrature quad = SphereQuadrature::for_degree(2 * degree + 2);

  // P = {F, H} and its first derivatives from the second-order jets.
  std::vector<double> p, grad_sq;
  for (int iz = 0; iz < quad.nz(); ++iz) {
    const double z = quad.z(iz);
    const double s = 1.0 - z * z;
    for (int ip = 0; ip < quad.nphi(); ++ip) {
      const double phi = quad.phi(ip);
      const RealJet f = real_harmonic_jet(a, z, phi);
      const RealJet h = real_harmonic_jet(b, z, phi);
      const double value = h.dz * f.dphi - h.dphi * f.dz;
      const double pz = h.dzz * f.dphi + h.dz * f.dzphi - h.dzphi * f.dz - h.dphi * f.dzz;
      const double pphi = h.dzphi * f.dphi + h.dz * f.dphiphi - h.dphiphi * f.dz - h.dphi * f.dzphi;
      p.push_back(value);
      grad_sq.push_back(s * pz * pz + pphi * pphi / s);
    }
  }
  std::vector<double> p_sq(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) p_sq[k] = p[k] * p[k];

  const double p_laplace_p = quad.integrate<double>(grad_sq);
  const double p_norm = quad.integrate<double>(p_sq);
  double p_inverse_p = 0.0;
  for (int i = 1; i <= degree; ++i) {
    for (int j = -i; j <= i; ++j) {
      const double c = quad.project_real(p, SphericalIndex(i, j));
      p_inverse_p += c * c / SphericalIndex(i, j).eigenvalue();
    }
  }
  const double k = -0.75 * p_laplace_p + 0.5 * (alpha + beta) * p_norm +
                   0.25 * (alpha - beta) * (alpha - beta) * p_inverse_p;
  return k / (alpha * beta);
}

}  // namespace symplecto::validation
