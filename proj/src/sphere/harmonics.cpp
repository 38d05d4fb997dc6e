#include "symplecto/sphere/harmonics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "symplecto/errors.hpp"

namespace symplecto::sphere {

namespace mp = boost::multiprecision;

namespace {

using IntPoly = std::vector<mp::cpp_int>;  // lowest degree first

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {0};
  IntPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

// Exact quotient p / (1 - z^2); the remainder must vanish.
IntPoly divide_one_minus_z2(IntPoly p) {
  if (p.size() < 3) throw std::logic_error("divide_one_minus_z2: degree too small");
  IntPoly r(p.size() - 2);
  for (std::size_t i = p.size() - 1; i >= 2; --i) {
    // p = (z^2 - 1) r: peel off the leading term.
    r[i - 2] = p[i];
    p[i - 2] += p[i];
    p[i] = 0;
  }
  if (p[0] != 0 || p[1] != 0) throw std::logic_error("divide_one_minus_z2: nonzero remainder");
  for (auto& c : r) c = -c;
  return r;
}

mp::cpp_int factorial(int n) {
  mp::cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::complex<double> phase(int m, double phi) {
  return {std::cos(m * phi), std::sin(m * phi)};
}

void require_interior(double z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("spherical harmonic evaluated at z = " + std::to_string(z) +
                      "; the poles |z| = 1 are outside the chart");
  }
}

}  // namespace

SphericalIndex::SphericalIndex(int l_, int m_) : l(l_), m(m_) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("SphericalIndex: need |m| <= l, got (l, m) = (" + std::to_string(l) + ", " +
                      std::to_string(m) + ")");
  }
}

HarmonicPolynomial::HarmonicPolynomial(SphericalIndex idx) : idx_(idx) {
  const int l = idx.l;
  const int m = idx.m;
  // (1 - z^2)^l
  IntPoly p(2 * l + 1);
  for (int j = 0; j <= l; ++j) {
    mp::cpp_int binom = factorial(l) / (factorial(j) * factorial(l - j));
    p[2 * j] = j % 2 == 0 ? binom : mp::cpp_int(-binom);
  }
  for (int d = 0; d < l + m; ++d) p = derivative(p);
  for (int d = 0; d < -m; ++d) p = divide_one_minus_z2(std::move(p));

  using Float = mp::cpp_bin_float_50;
  const Float norm = mp::sqrt(Float((2 * l + 1) * factorial(l - m)) /
                              (4 * boost::math::constants::pi<Float>() * Float(factorial(l + m))));
  const Float scale = (l % 2 == 0 ? 1 : -1) * norm / Float(mp::cpp_int(1) << l) / Float(factorial(l));
  coeffs_.reserve(p.size());
  for (const auto& c : p) coeffs_.push_back(static_cast<double>(Float(c) * scale));
}

HarmonicPolynomial::Parts HarmonicPolynomial::poly(double z) const {
  double p = 0.0, dp = 0.0, ddp = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    ddp = ddp * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + coeffs_[i];
  }
  return {p, dp, ddp};
}

double HarmonicPolynomial::value(double z) const {
  const int a = std::abs(idx_.m);
  return std::pow(1.0 - z * z, 0.5 * a) * poly(z).p;
}

double HarmonicPolynomial::dz(double z) const {
  const int a = std::abs(idx_.m);
  const double s = 1.0 - z * z;
  const auto [p, dp, ddp] = poly(z);
  // u = s^{a/2}, u' = -a z s^{a/2 - 1}
  const double u = std::pow(s, 0.5 * a);
  const double du = a == 0 ? 0.0 : -a * z * std::pow(s, 0.5 * a - 1.0);
  return du * p + u * dp;
}

double HarmonicPolynomial::dzz(double z) const {
  const int a = std::abs(idx_.m);
  const double s = 1.0 - z * z;
  const auto [p, dp, ddp] = poly(z);
  const double u = std::pow(s, 0.5 * a);
  double du = 0.0, ddu = 0.0;
  if (a != 0) {
    du = -a * z * std::pow(s, 0.5 * a - 1.0);
    ddu = -a * std::pow(s, 0.5 * a - 1.0) + a * (a - 2.0) * z * z * std::pow(s, 0.5 * a - 2.0);
  }
  return ddu * p + 2.0 * du * dp + u * ddp;
}

const HarmonicPolynomial& harmonic_polynomial(SphericalIndex idx) {
  static std::mutex mutex;
  static std::map<SphericalIndex, std::unique_ptr<HarmonicPolynomial>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[idx];
  if (!slot) slot = std::make_unique<HarmonicPolynomial>(idx);
  return *slot;
}

std::complex<double> ylm(SphericalIndex idx, double z, double phi) {
  require_interior(z);
  return harmonic_polynomial(idx).value(z) * phase(idx.m, phi);
}

ComplexJet ylm_jet(SphericalIndex idx, double z, double phi) {
  require_interior(z);
  const auto& g = harmonic_polynomial(idx);
  const std::complex<double> e = phase(idx.m, phi);
  const std::complex<double> im(0.0, idx.m);
  const double v = g.value(z), dz = g.dz(z), dzz = g.dzz(z);
  ComplexJet j;
  j.v = v * e;
  j.dz = dz * e;
  j.dphi = im * v * e;
  j.dzz = dzz * e;
  j.dzphi = im * dz * e;
  j.dphiphi = -static_cast<double>(idx.m) * idx.m * v * e;
  return j;
}

RealJet real_harmonic_jet(SphericalIndex idx, double z, double phi) {
  const ComplexJet c = ylm_jet(SphericalIndex(idx.l, std::abs(idx.m)), z, phi);
  if (idx.m == 0) return {c.v.real(), c.dz.real(), c.dphi.real(),
                          c.dzz.real(), c.dzphi.real(), c.dphiphi.real()};
  const double r2 = std::sqrt(2.0);
  auto part = [&](std::complex<double> x) { return r2 * (idx.m > 0 ? x.real() : x.imag()); };
  return {part(c.v), part(c.dz), part(c.dphi), part(c.dzz), part(c.dzphi), part(c.dphiphi)};
}

double real_harmonic(SphericalIndex idx, double z, double phi) {
  return real_harmonic_jet(idx, z, phi).v;
}

std::vector<std::pair<SphericalIndex, std::complex<double>>> real_to_complex(SphericalIndex idx) {
  if (idx.m == 0) return {{idx, 1.0}};
  const int a = std::abs(idx.m);
  const double r = 1.0 / std::sqrt(2.0);
  const double sign = a % 2 == 0 ? 1.0 : -1.0;
  // conj(Y_la) = (-1)^a Y_l,-a
  if (idx.m > 0) {
    return {{SphericalIndex(idx.l, a), r}, {SphericalIndex(idx.l, -a), sign * r}};
  }
  return {{SphericalIndex(idx.l, a), std::complex<double>(0.0, -r)},
          {SphericalIndex(idx.l, -a), std::complex<double>(0.0, sign * r)}};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // P_n(x) and P_n'(x) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = w;
  }
}

SphereQuadrature::SphereQuadrature(int nz, int nphi) : nphi_(nphi) {
  if (nz < 1 || nphi < 1) throw DomainError("SphereQuadrature: node counts must be positive");
  gauss_legendre(nz, z_, wz_);
}

SphereQuadrature SphereQuadrature::for_degree(int degree) {
  return SphereQuadrature(degree + 2, 2 * degree + 2);
}

std::complex<double> SphereQuadrature::project(std::span<const std::complex<double>> f,
                                               SphericalIndex idx) const {
  const auto& g = harmonic_polynomial(idx);
  std::complex<double> sum = 0.0;
  std::size_t k = 0;
  for (int iz = 0; iz < nz(); ++iz) {
    std::complex<double> row = 0.0;
    for (int ip = 0; ip < nphi_; ++ip) row += f[k++] * std::conj(phase(idx.m, phi(ip)));
    sum += row * g.value(z_[iz]) * weight(iz);
  }
  return sum;
}

double SphereQuadrature::project_real(std::span<const double> f, SphericalIndex idx) const {
  double sum = 0.0;
  std::size_t k = 0;
  for (int iz = 0; iz < nz(); ++iz) {
    double row = 0.0;
    for (int ip = 0; ip < nphi_; ++ip) row += f[k++] * real_harmonic(idx, z_[iz], phi(ip));
    sum += row * weight(iz);
  }
  return sum;
}

ComplexJet HarmonicExpansion::jet(double z, double phi) const {
  ComplexJet out;
  for (const auto& [idx, c] : terms) {
    const ComplexJet j = ylm_jet(idx, z, phi);
    out.v += c * j.v;
    out.dz += c * j.dz;
    out.dphi += c * j.dphi;
    out.dzz += c * j.dzz;
    out.dzphi += c * j.dzphi;
    out.dphiphi += c * j.dphiphi;
  }
  return out;
}

int HarmonicExpansion::max_degree() const {
  int d = 0;
  for (const auto& [idx, c] : terms) d = std::max(d, idx.l);
  return d;
}

std::vector<std::complex<double>> sample_bracket(const HarmonicExpansion& f,
                                                 const HarmonicExpansion& h,
                                                 const SphereQuadrature& quad) {
  return quad.sample([&](double z, double phi) { return bracket(f.jet(z, phi), h.jet(z, phi)); });
}

}  // namespace symplecto::sphere
