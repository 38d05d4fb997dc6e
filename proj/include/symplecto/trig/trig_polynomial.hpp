#pragma once

// Exact algebra of trigonometric Hamiltonians on T^{2q} = R^{2q} / 2piZ^{2q}.
//
// A Hamiltonian is a finite sum of modes c * cos(n.x + m.y) or
// c * sin(n.x + m.y), with n, m integer q-vectors. Every mode is stored in
// canonical form: the first nonzero entry of the concatenated vector (n, m)
// is positive. Negating a wavevector leaves a cosine unchanged and flips the
// sign of a sine, so each function has exactly one representation and two
// polynomials can be compared coefficient by coefficient.
//
// Sign convention of the Poisson bracket. For a pair of modes
//
//   {cos(n.x + m.y), cos(k.x + l.y)}
//       = 1/2 (m.k - n.l) (cos((n-k).x + (m-l).y) - cos((n+k).x + (m+l).y)),
//
// i.e. {F, H} = sum_i (dF/dy_i dH/dx_i - dF/dx_i dH/dy_i). This is the
// negative of the textbook convention. Every curvature quantity in this
// library is quadratic in brackets, so the choice does not change any
// curvature value, but bracket coefficients themselves carry this sign.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace symplecto::trig {

enum class Phase : int { Cos = 0, Sin = 1 };

/// Coefficients whose magnitude falls below this are dropped after every
/// arithmetic operation.
inline constexpr double kPruneTolerance = 1e-15;

struct TrigMode {
  std::vector<int> n;  // x-wavevector
  std::vector<int> m;  // y-wavevector
  Phase phase = Phase::Cos;

  auto operator<=>(const TrigMode&) const = default;
  bool operator==(const TrigMode&) const = default;

  int q() const { return static_cast<int>(n.size()); }
  bool is_constant() const;
  /// |n|^2 + |m|^2, the Laplace eigenvalue of the mode.
  long eigenvalue() const;
};

class TrigPolynomial {
 public:
  using TermMap = std::map<TrigMode, double>;

  explicit TrigPolynomial(int q = 1);

  static TrigPolynomial mode(std::vector<int> n, std::vector<int> m, Phase phase,
                             double coeff = 1.0);
  // q = 1 shorthands: cos(n x + m y), sin(n x + m y).
  static TrigPolynomial cos1(int n, int m, double coeff = 1.0);
  static TrigPolynomial sin1(int n, int m, double coeff = 1.0);

  int q() const { return q_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds coeff * mode, canonicalising the mode first. A sine of the zero
  /// wavevector vanishes; a cosine of it is the constant term.
  void add(TrigMode mode, double coeff);
  /// Coefficient of the canonical form of `mode` (0 if absent).
  double coeff(const TrigMode& mode) const;

  bool has_constant() const;
  double max_abs_coeff() const;
  /// Highest |component| over all stored wavevectors.
  int max_wavenumber() const;

  /// Point value; x and y have length q.
  double evaluate(std::span<const double> x, std::span<const double> y) const;

  TrigPolynomial& operator+=(const TrigPolynomial& other);
  TrigPolynomial& operator-=(const TrigPolynomial& other);
  TrigPolynomial& operator*=(double s);

  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
  friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }
  friend TrigPolynomial operator*(TrigPolynomial a, double s) { return a *= s; }
  friend TrigPolynomial operator*(double s, TrigPolynomial a) { return a *= s; }
  friend TrigPolynomial operator-(TrigPolynomial a) { return a *= -1.0; }

  bool operator==(const TrigPolynomial&) const = default;

 private:
  void require_same_q(const TrigPolynomial& other) const;

  int q_;
  TermMap terms_;
};

/// Canonical representative of a mode and the sign its coefficient picks up.
std::pair<TrigMode, double> canonicalize(TrigMode mode);

TrigPolynomial poisson_bracket(const TrigPolynomial& f, const TrigPolynomial& h);
/// Delta = -div grad; multiplies each mode by |n|^2 + |m|^2.
TrigPolynomial laplacian(const TrigPolynomial& f);
/// Throws DomainError if f has a constant term.
TrigPolynomial inverse_laplacian(const TrigPolynomial& f);

/// Bi-invariant pairing: integral of f*h over the torus (volume (2pi)^{2q}).
double l2_inner(const TrigPolynomial& f, const TrigPolynomial& h);
/// Right-invariant (kinetic energy) pairing, l2_inner(laplacian(f), h).
double right_inner(const TrigPolynomial& f, const TrigPolynomial& h);
/// <{g,f}, h> + <f, {g,h}>; vanishes identically by ad-invariance.
double ad_invariance_defect(const TrigPolynomial& f, const TrigPolynomial& h,
                            const TrigPolynomial& g);

/// Largest coefficient difference over the union of both term sets.
double max_coeff_distance(const TrigPolynomial& a, const TrigPolynomial& b);

/// (2 pi)^{2q}, the volume of T^{2q}.
double torus_volume(int q);

}  // namespace symplecto::trig
