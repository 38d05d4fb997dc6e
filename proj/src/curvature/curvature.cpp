#include "symplecto/curvature/curvature.hpp"

#include <cmath>
#include <string>

#include "symplecto/errors.hpp"

namespace symplecto::curvature {

using trig::Phase;
using trig::TrigPolynomial;

namespace {

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

std::string describe(const TrigPolynomial& f) {
  std::string s;
  int shown = 0;
  for (const auto& [mode, c] : f.terms()) {
    if (shown++ == 3) {
      s += " + ...";
      break;
    }
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + (mode.phase == Phase::Cos ? "*cos(" : "*sin(");
    for (std::size_t i = 0; i < mode.n.size(); ++i) {
      s += (i ? "," : "") + std::to_string(mode.n[i]);
    }
    s += ";";
    for (std::size_t i = 0; i < mode.m.size(); ++i) {
      s += (i ? "," : "") + std::to_string(mode.m[i]);
    }
    s += ")";
  }
  return s.empty() ? "0" : s;
}

[[noreturn]] void degenerate(const char* where, const TrigPolynomial& f, const TrigPolynomial& h,
                             double rel) {
  throw DegeneratePlane(std::string(where) + ": F = " + describe(f) + " and H = " + describe(h) +
                        " do not span a plane (relative Gram determinant " +
                        std::to_string(rel) + ")");
}

struct OrthonormalPair {
  TrigPolynomial f, h;
  double ff, hh;
};

// Gram-Schmidt in the pairing `inner`.
template <class Inner>
OrthonormalPair orthonormalise(const TrigPolynomial& f, const TrigPolynomial& h, Inner inner,
                               const char* where) {
  if (f.q() != h.q()) throw DimensionMismatch(std::string(where) + ": operands differ in q");
  const double ff = inner(f, f);
  const double hh = inner(h, h);
  const double fh = inner(f, h);
  const double rel = relative_gram_determinant(ff, hh, fh);
  if (!(rel > kDegeneratePlaneTolerance)) degenerate(where, f, h, rel);
  TrigPolynomial f1 = f * (1.0 / std::sqrt(ff));
  TrigPolynomial h1 = h - f * (fh / ff);
  h1 *= 1.0 / std::sqrt(inner(h1, h1));
  return {std::move(f1), std::move(h1), ff, hh};
}

}  // namespace

const char* formula_name(Formula f) {
  switch (f) {
    case Formula::BiInvariant: return "BI_INVARIANT";
    case Formula::RightGeneral: return "RIGHT_GENERAL";
    case Formula::RightEigen: return "RIGHT_EIGEN";
    case Formula::RightStructure: return "RIGHT_STRUCTURE";
    case Formula::TorusBi: return "TORUS_BI";
    case Formula::TorusRight: return "TORUS_RIGHT";
  }
  return "UNKNOWN";
}

double CurvatureReport::term(const std::string& label) const {
  for (const auto& [name, value] : terms) {
    if (name == label) return value;
  }
  throw DomainError("CurvatureReport: no term named " + label);
}

double relative_gram_determinant(double ff, double hh, double fh) {
  if (!(ff > 0.0) || !(hh > 0.0)) return 0.0;
  return (ff * hh - fh * fh) / (ff * hh);
}

CurvatureReport k_bi(const TrigPolynomial& f, const TrigPolynomial& h) {
  const double ff = trig::l2_inner(f, f);
  const double hh = trig::l2_inner(h, h);
  const double fh = trig::l2_inner(f, h);
  const double rel = relative_gram_determinant(ff, hh, fh);
  if (!(rel > kDegeneratePlaneTolerance)) degenerate("k_bi", f, h, rel);
  // {F, H - cF} = {F, H}, so only the Gram determinant normalises.
  const TrigPolynomial p = trig::poisson_bracket(f, h);
  const double k = 0.25 * trig::l2_inner(p, p) / (ff * hh - fh * fh);
  return {k, Formula::BiInvariant, {{"bracket_norm", k}}, ff, hh};
}

double k_bi_contraction(const TrigPolynomial& f, const TrigPolynomial& h) {
  const double ff = trig::l2_inner(f, f);
  const double hh = trig::l2_inner(h, h);
  const double fh = trig::l2_inner(f, h);
  const double rel = relative_gram_determinant(ff, hh, fh);
  if (!(rel > kDegeneratePlaneTolerance)) degenerate("k_bi_contraction", f, h, rel);
  const TrigPolynomial inner = trig::poisson_bracket(trig::poisson_bracket(f, h), h);
  return -0.25 * trig::l2_inner(inner, f) / (ff * hh - fh * fh);
}

TrigPolynomial nabla_hamiltonian(const TrigPolynomial& f, const TrigPolynomial& h) {
  TrigPolynomial rhs = trig::laplacian(trig::poisson_bracket(f, h));
  rhs += trig::poisson_bracket(f, trig::laplacian(h));
  rhs += trig::poisson_bracket(h, trig::laplacian(f));
  return trig::inverse_laplacian(rhs) * 0.5;
}

TrigPolynomial nabla_symmetric(const TrigPolynomial& f, const TrigPolynomial& h) {
  TrigPolynomial rhs = trig::poisson_bracket(f, trig::laplacian(h));
  rhs += trig::poisson_bracket(h, trig::laplacian(f));
  return trig::inverse_laplacian(rhs);
}

CurvatureReport k_right_general(const TrigPolynomial& f, const TrigPolynomial& h) {
  const auto pair = orthonormalise(f, h, trig::right_inner, "k_right_general");
  const TrigPolynomial& F = pair.f;
  const TrigPolynomial& H = pair.h;
  const TrigPolynomial dF = trig::laplacian(F);
  const TrigPolynomial dH = trig::laplacian(H);
  const TrigPolynomial p = trig::poisson_bracket(F, H);
  const TrigPolynomial f_dh = trig::poisson_bracket(F, dH);

  const double t1 = -0.75 * trig::l2_inner(trig::laplacian(p), p);
  const double t2 = 0.5 * trig::l2_inner(p, f_dh + trig::poisson_bracket(dF, H));
  const double t3 = -trig::l2_inner(trig::poisson_bracket(F, dF),
                                    trig::inverse_laplacian(trig::poisson_bracket(H, dH)));
  const TrigPolynomial t = f_dh + trig::poisson_bracket(H, dF);
  const double t4 = 0.25 * trig::l2_inner(t, trig::inverse_laplacian(t));

  return {t1 + t2 + t3 + t4,
          Formula::RightGeneral,
          {{"bracket_laplace", t1}, {"bracket_mixed", t2}, {"vorticity_transport", t3},
           {"symmetric_connection", t4}},
          pair.ff,
          pair.hh};
}

double laplace_eigenvalue(const TrigPolynomial& f) {
  if (f.empty()) throw NotEigenfunction("laplace_eigenvalue: zero function");
  const double alpha = static_cast<double>(f.terms().begin()->first.eigenvalue());
  const TrigPolynomial residual = trig::laplacian(f) - f * alpha;
  const double scale = std::max(1.0, std::sqrt(trig::l2_inner(f, f)) * alpha);
  const double r = std::sqrt(trig::l2_inner(residual, residual));
  if (r >= 1e-12 * scale) {
    throw NotEigenfunction("laplace_eigenvalue: |Delta F - alpha F| = " + std::to_string(r) +
                           " for F = " + describe(f));
  }
  return alpha;
}

CurvatureReport k_right_eigen(const TrigPolynomial& f, const TrigPolynomial& h) {
  const double alpha = laplace_eigenvalue(f);
  const double beta = laplace_eigenvalue(h);
  if (alpha == 0.0 || beta == 0.0) {
    throw DomainError("k_right_eigen: constant Hamiltonians generate no motion");
  }
  // Removing the F-component of H keeps H in its eigenspace: either alpha
  // equals beta, or the two are already orthogonal.
  const auto pair = orthonormalise(f, h, trig::right_inner, "k_right_eigen");
  const TrigPolynomial p = trig::poisson_bracket(pair.f, pair.h);
  const double t1 = -0.75 * trig::l2_inner(trig::laplacian(p), p);
  const double t2 = 0.5 * (alpha + beta) * trig::l2_inner(p, p);
  const double t3 =
      0.25 * (alpha - beta) * (alpha - beta) * trig::l2_inner(p, trig::inverse_laplacian(p));
  return {t1 + t2 + t3,
          Formula::RightEigen,
          {{"bracket_laplace", t1}, {"bracket_norm", t2}, {"bracket_inverse", t3}},
          pair.ff,
          pair.hh};
}

EigenPairExpansion torus_structure_expansion(const TrigPolynomial& f, const TrigPolynomial& h,
                                             double max_eigenvalue) {
  EigenPairExpansion e;
  e.alpha = laplace_eigenvalue(f);
  e.beta = laplace_eigenvalue(h);
  const auto pair = orthonormalise(f, h, trig::l2_inner, "torus_structure_expansion");
  const TrigPolynomial p = trig::poisson_bracket(pair.f, pair.h);
  e.bracket_norm_sq = trig::l2_inner(p, p);
  // cos and sin modes have squared norm (2 pi)^{2q} / 2.
  const double unit = std::sqrt(0.5 * trig::torus_volume(p.q()));
  for (const auto& [mode, c] : p.terms()) {
    const double lambda = static_cast<double>(mode.eigenvalue());
    if (max_eigenvalue >= 0.0 && lambda > max_eigenvalue) continue;
    e.terms.push_back({lambda, c * unit});
  }
  return e;
}

CurvatureReport k_from_structure_constants(const EigenPairExpansion& e) {
  if (!(e.alpha > 0.0) || !(e.beta > 0.0)) {
    throw DomainError("k_from_structure_constants: eigenvalues must be positive");
  }
  double s_lambda = 0.0, s_plain = 0.0, s_inverse = 0.0;
  for (const auto& t : e.terms) {
    const double c2 = t.coeff * t.coeff;
    s_lambda += t.lambda * c2;
    s_plain += c2;
    s_inverse += c2 / t.lambda;
  }
  const double residual = std::abs(e.bracket_norm_sq - s_plain);
  if (residual > kCoverageTolerance * std::max(1.0, e.bracket_norm_sq)) {
    throw IncompleteBasis("k_from_structure_constants: basis covers " + std::to_string(s_plain) +
                          " of |{F,H}|^2 = " + std::to_string(e.bracket_norm_sq) +
                          " (residual " + std::to_string(residual) + ")");
  }
  const double ab = e.alpha * e.beta;
  const double t1 = -0.75 * s_lambda / ab;
  const double t2 = 0.5 * (e.alpha + e.beta) * s_plain / ab;
  const double t3 = 0.25 * (e.alpha - e.beta) * (e.alpha - e.beta) * s_inverse / ab;
  return {t1 + t2 + t3,
          Formula::RightStructure,
          {{"bracket_laplace", t1}, {"bracket_norm", t2}, {"bracket_inverse", t3}},
          e.alpha,
          e.beta};
}

ModePair ModePair::q1(int n, int m, int k, int l) { return {{n}, {m}, {k}, {l}}; }

TrigPolynomial ModePair::f() const { return TrigPolynomial::mode(n, m, phase_f); }
TrigPolynomial ModePair::h() const { return TrigPolynomial::mode(k, l, phase_h); }

long ModePair::cross() const { return dot(m, k) - dot(n, l); }

bool ModePair::resonant() const {
  bool same = true, opposite = true;
  for (std::size_t i = 0; i < n.size(); ++i) {
    same = same && n[i] == k[i] && m[i] == l[i];
    opposite = opposite && n[i] == -k[i] && m[i] == -l[i];
  }
  return same || opposite;
}

namespace {

void validate(const ModePair& p, const char* where) {
  const std::size_t q = p.n.size();
  if (q == 0 || p.m.size() != q || p.k.size() != q || p.l.size() != q) {
    throw DimensionMismatch(std::string(where) + ": wavevectors must share a nonzero length");
  }
  if (dot(p.n, p.n) + dot(p.m, p.m) == 0 || dot(p.k, p.k) + dot(p.l, p.l) == 0) {
    throw DomainError(std::string(where) + ": zero wavevector");
  }
}

std::string describe(const ModePair& p) {
  auto vec = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
  };
  return "(" + vec(p.n) + "," + vec(p.m) + "," + vec(p.k) + "," + vec(p.l) + ")";
}

}  // namespace

CurvatureReport k_torus_bi(const ModePair& p) {
  validate(p, "k_torus_bi");
  const double vol = trig::torus_volume(p.q());
  if (p.resonant()) {
    // Same wavevector up to sign: the plane exists only for cos/sin.
    if (trig::l2_inner(p.f(), p.h()) != 0.0) {
      throw DegeneratePlane("k_torus_bi: pair " + describe(p) + " is one function twice");
    }
  }
  const double cross = static_cast<double>(p.cross());
  const double k = cross * cross / (4.0 * vol);
  return {k, Formula::TorusBi, {{"cross", cross}, {"volume", vol}}, 0.5 * vol, 0.5 * vol};
}

CurvatureReport k_torus_right(const ModePair& p) {
  validate(p, "k_torus_right");
  if (p.resonant()) {
    throw SingularDenominator("k_torus_right: resonant pair " + describe(p) +
                              " has (n,m) = +-(k,l); the closed form is 0/0");
  }
  const double vol = trig::torus_volume(p.q());
  const double alpha = static_cast<double>(dot(p.n, p.n) + dot(p.m, p.m));
  const double beta = static_cast<double>(dot(p.k, p.k) + dot(p.l, p.l));
  const double vw = static_cast<double>(dot(p.n, p.k) + dot(p.m, p.l));
  const double a = alpha + beta - 2.0 * vw;  // |v - w|^2
  const double b = alpha + beta + 2.0 * vw;  // |v + w|^2
  const double cross = static_cast<double>(p.cross());
  // alpha beta - (v.w)^2 equals cross^2 when q = 1 (Lagrange identity).
  const double k =
      -cross * cross * (alpha + beta) * (alpha * beta - vw * vw) / (vol * alpha * beta * a * b);
  return {k,
          Formula::TorusRight,
          {{"cross", cross}, {"alpha", alpha}, {"beta", beta}, {"diff_sq", a}, {"sum_sq", b}},
          0.5 * vol * alpha,
          0.5 * vol * beta};
}

}  // namespace symplecto::curvature
