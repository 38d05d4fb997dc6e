#pragma once

// Spherical harmonics on the unit sphere in canonical coordinates (z, phi),
// z = cos(theta), with area form dz ^ dphi (total area 4 pi).
//
//   Y_lm(z, phi) = (-1)^l / (2^l l!) sqrt((2l+1)(l-m)! / (4 pi (l+m)!))
//                  e^{i m phi} (1-z^2)^{m/2} d^{l+m}/dz^{l+m} (1-z^2)^l
//
// for all -l <= m <= l, negative m included. This differs from the
// Condon-Shortley harmonic by (-1)^m, so conj(Y_lm) = (-1)^m Y_l,-m.
// For m < 0 the derivative is divisible by (1-z^2)^{|m|}; the quotient is
// formed exactly in integer arithmetic, so every harmonic is stored as
// (1-z^2)^{|m|/2} P(z) with a polynomial P.
//
// Real harmonics: R_l0 = Y_l0, R_lm = sqrt(2) Re Y_lm and
// R_l,-m = sqrt(2) Im Y_lm for m > 0. They are orthonormal and span the
// same degree-l space.

#include <complex>
#include <span>
#include <vector>

namespace symplecto::sphere {

struct SphericalIndex {
  int l = 0;
  int m = 0;

  SphericalIndex() = default;
  /// Throws DomainError unless 0 <= |m| <= l.
  SphericalIndex(int l, int m);

  bool operator==(const SphericalIndex&) const = default;
  auto operator<=>(const SphericalIndex&) const = default;
  double eigenvalue() const { return static_cast<double>(l) * (l + 1); }
};

/// z-dependence g(z) = C (1-z^2)^{|m|/2} P(z) of Y_lm, normalisation included.
class HarmonicPolynomial {
 public:
  explicit HarmonicPolynomial(SphericalIndex idx);

  double value(double z) const;
  double dz(double z) const;
  double dzz(double z) const;
  /// Coefficients of C P(z), lowest degree first.
  std::span<const double> coefficients() const { return coeffs_; }

 private:
  struct Parts {
    double p, dp, ddp;
  };
  Parts poly(double z) const;

  SphericalIndex idx_;
  std::vector<double> coeffs_;
};

/// Shared, lazily built polynomial for Y_lm.
const HarmonicPolynomial& harmonic_polynomial(SphericalIndex idx);

/// Value and derivatives up to second order.
template <class T>
struct Jet {
  T v{}, dz{}, dphi{}, dzz{}, dzphi{}, dphiphi{};
};
using ComplexJet = Jet<std::complex<double>>;
using RealJet = Jet<double>;

/// Throws DomainError for |z| >= 1.
std::complex<double> ylm(SphericalIndex idx, double z, double phi);
ComplexJet ylm_jet(SphericalIndex idx, double z, double phi);
double real_harmonic(SphericalIndex idx, double z, double phi);
RealJet real_harmonic_jet(SphericalIndex idx, double z, double phi);

/// R_idx = sum_mu u_mu Y_{l,mu}; at most two entries.
std::vector<std::pair<SphericalIndex, std::complex<double>>> real_to_complex(SphericalIndex idx);

/// -(d/dz (1-z^2) d/dz + (1-z^2)^{-1} d^2/dphi^2) applied through a jet.
template <class T>
T laplace_beltrami(const Jet<T>& j, double z) {
  const double s = 1.0 - z * z;
  return -(s * j.dzz - 2.0 * z * j.dz + j.dphiphi / s);
}

/// {F, H} = H_z F_phi - H_phi F_z.
template <class T>
T bracket(const Jet<T>& f, const Jet<T>& h) {
  return h.dz * f.dphi - h.dphi * f.dz;
}

/// Gauss-Legendre nodes in z times a uniform grid in phi.
class SphereQuadrature {
 public:
  SphereQuadrature(int nz, int nphi);
  /// Exact (up to rounding) for products of harmonics of total degree
  /// up to `degree`, with margin: nz = degree + 2, nphi = 2 degree + 2.
  static SphereQuadrature for_degree(int degree);

  int nz() const { return static_cast<int>(z_.size()); }
  int nphi() const { return nphi_; }
  std::size_t size() const { return z_.size() * static_cast<std::size_t>(nphi_); }
  double z(int iz) const { return z_[iz]; }
  double phi(int ip) const { return 2.0 * M_PI * ip / nphi_; }
  /// Weight of node (iz, ip); nodes are stored iz-major.
  double weight(int iz) const { return wz_[iz] * 2.0 * M_PI / nphi_; }

  template <class F>
  auto sample(F&& f) const {
    using T = decltype(f(0.0, 0.0));
    std::vector<T> out;
    out.reserve(size());
    for (int iz = 0; iz < nz(); ++iz) {
      for (int ip = 0; ip < nphi_; ++ip) out.push_back(f(z_[iz], phi(ip)));
    }
    return out;
  }

  template <class T>
  T integrate(std::span<const T> values) const {
    T sum{};
    std::size_t k = 0;
    for (int iz = 0; iz < nz(); ++iz) {
      T row{};
      for (int ip = 0; ip < nphi_; ++ip) row += values[k++];
      sum += row * weight(iz);
    }
    return sum;
  }

  /// <f, Y_idx> = int f conj(Y_idx).
  std::complex<double> project(std::span<const std::complex<double>> f, SphericalIndex idx) const;
  double project_real(std::span<const double> f, SphericalIndex idx) const;

 private:
  std::vector<double> z_, wz_;
  int nphi_;
};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Finite complex combination sum c_idx Y_idx.
struct HarmonicExpansion {
  std::vector<std::pair<SphericalIndex, std::complex<double>>> terms;

  ComplexJet jet(double z, double phi) const;
  int max_degree() const;
};

/// Pointwise bracket of two expansions on the quadrature nodes, with
/// derivatives taken analytically term by term.
std::vector<std::complex<double>> sample_bracket(const HarmonicExpansion& f,
                                                 const HarmonicExpansion& h,
                                                 const SphereQuadrature& quad);

}  // namespace symplecto::sphere
