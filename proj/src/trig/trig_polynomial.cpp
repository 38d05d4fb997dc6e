#include "symplecto/trig/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "symplecto/errors.hpp"

namespace symplecto::trig {

namespace {

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

std::vector<int> add_vec(const std::vector<int>& a, const std::vector<int>& b, int sign) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sign * b[i];
  return r;
}

void require_same_q(const TrigPolynomial& a, const TrigPolynomial& b, const char* op) {
  if (a.q() != b.q()) {
    throw DimensionMismatch(std::string(op) + ": operands have q=" + std::to_string(a.q()) +
                            " and q=" + std::to_string(b.q()));
  }
}

}  // namespace

bool TrigMode::is_constant() const {
  return std::all_of(n.begin(), n.end(), [](int v) { return v == 0; }) &&
         std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

long TrigMode::eigenvalue() const { return dot(n, n) + dot(m, m); }

std::pair<TrigMode, double> canonicalize(TrigMode mode) {
  int first = 0;
  for (int v : mode.n) {
    if (v != 0) {
      first = v;
      break;
    }
  }
  if (first == 0) {
    for (int v : mode.m) {
      if (v != 0) {
        first = v;
        break;
      }
    }
  }
  if (first == 0) {
    // sin(0) vanishes; cos(0) is the constant mode.
    const double keep = mode.phase == Phase::Sin ? 0.0 : 1.0;
    return {std::move(mode), keep};
  }
  if (first > 0) return {std::move(mode), 1.0};
  for (int& v : mode.n) v = -v;
  for (int& v : mode.m) v = -v;
  const double sign = mode.phase == Phase::Sin ? -1.0 : 1.0;
  return {std::move(mode), sign};
}

TrigPolynomial::TrigPolynomial(int q) : q_(q) {
  if (q < 1) throw DomainError("TrigPolynomial: q must be positive, got " + std::to_string(q));
}

TrigPolynomial TrigPolynomial::mode(std::vector<int> n, std::vector<int> m, Phase phase,
                                    double coeff) {
  if (n.size() != m.size() || n.empty()) {
    throw DimensionMismatch("TrigPolynomial::mode: n and m must be nonempty and of equal length");
  }
  TrigPolynomial p(static_cast<int>(n.size()));
  p.add(TrigMode{std::move(n), std::move(m), phase}, coeff);
  return p;
}

TrigPolynomial TrigPolynomial::cos1(int n, int m, double coeff) {
  return mode({n}, {m}, Phase::Cos, coeff);
}

TrigPolynomial TrigPolynomial::sin1(int n, int m, double coeff) {
  return mode({n}, {m}, Phase::Sin, coeff);
}

void TrigPolynomial::add(TrigMode mode, double coeff) {
  if (mode.q() != q_ || static_cast<int>(mode.m.size()) != q_) {
    throw DimensionMismatch("TrigPolynomial::add: mode has q=" + std::to_string(mode.q()) +
                            ", polynomial has q=" + std::to_string(q_));
  }
  auto [canon, sign] = canonicalize(std::move(mode));
  if (sign == 0.0 || coeff == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(canon), 0.0);
  it->second += sign * coeff;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
}

double TrigPolynomial::coeff(const TrigMode& mode) const {
  auto [canon, sign] = canonicalize(mode);
  if (sign == 0.0) return 0.0;
  auto it = terms_.find(canon);
  return it == terms_.end() ? 0.0 : sign * it->second;
}

bool TrigPolynomial::has_constant() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_constant(); });
}

double TrigPolynomial::max_abs_coeff() const {
  double r = 0.0;
  for (const auto& [mode, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

int TrigPolynomial::max_wavenumber() const {
  int r = 0;
  for (const auto& [mode, c] : terms_) {
    for (int v : mode.n) r = std::max(r, std::abs(v));
    for (int v : mode.m) r = std::max(r, std::abs(v));
  }
  return r;
}

double TrigPolynomial::evaluate(std::span<const double> x, std::span<const double> y) const {
  if (static_cast<int>(x.size()) != q_ || static_cast<int>(y.size()) != q_) {
    throw DimensionMismatch("TrigPolynomial::evaluate: point dimension does not match q");
  }
  double sum = 0.0;
  for (const auto& [mode, c] : terms_) {
    double theta = 0.0;
    for (int i = 0; i < q_; ++i) theta += mode.n[i] * x[i] + mode.m[i] * y[i];
    sum += c * (mode.phase == Phase::Cos ? std::cos(theta) : std::sin(theta));
  }
  return sum;
}

void TrigPolynomial::require_same_q(const TrigPolynomial& other) const {
  trig::require_same_q(*this, other, "TrigPolynomial arithmetic");
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
  require_same_q(other);
  for (const auto& [mode, c] : other.terms_) add(mode, c);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& other) {
  require_same_q(other);
  for (const auto& [mode, c] : other.terms_) add(mode, -c);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator*=(double s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < kPruneTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

TrigPolynomial poisson_bracket(const TrigPolynomial& f, const TrigPolynomial& h) {
  require_same_q(f, h, "poisson_bracket");
  TrigPolynomial out(f.q());
  for (const auto& [a, cf] : f.terms()) {
    for (const auto& [b, ch] : h.terms()) {
      // dF/dy . dH/dx - dF/dx . dH/dy = (m.k - n.l) phi_a'(a) phi_b'(b)
      const long cross = dot(a.m, b.n) - dot(a.n, b.m);
      if (cross == 0) continue;
      const double s = 0.5 * static_cast<double>(cross) * cf * ch;
      TrigMode diff{add_vec(a.n, b.n, -1), add_vec(a.m, b.m, -1), Phase::Cos};
      TrigMode sum{add_vec(a.n, b.n, +1), add_vec(a.m, b.m, +1), Phase::Cos};
      if (a.phase == Phase::Cos && b.phase == Phase::Cos) {
        // sin a sin b
        out.add(std::move(diff), s);
        out.add(std::move(sum), -s);
      } else if (a.phase == Phase::Sin && b.phase == Phase::Sin) {
        // cos a cos b
        out.add(std::move(diff), s);
        out.add(std::move(sum), s);
      } else if (a.phase == Phase::Cos) {
        // -sin a cos b
        diff.phase = sum.phase = Phase::Sin;
        out.add(std::move(sum), -s);
        out.add(std::move(diff), -s);
      } else {
        // -cos a sin b
        diff.phase = sum.phase = Phase::Sin;
        out.add(std::move(sum), -s);
        out.add(std::move(diff), s);
      }
    }
  }
  return out;
}

TrigPolynomial laplacian(const TrigPolynomial& f) {
  TrigPolynomial out(f.q());
  for (const auto& [mode, c] : f.terms()) {
    out.add(mode, static_cast<double>(mode.eigenvalue()) * c);
  }
  return out;
}

TrigPolynomial inverse_laplacian(const TrigPolynomial& f) {
  TrigPolynomial out(f.q());
  for (const auto& [mode, c] : f.terms()) {
    if (mode.is_constant()) {
      throw DomainError("inverse_laplacian: input has a constant term (" + std::to_string(c) +
                        "); Delta is invertible only on zero-mean functions");
    }
    out.add(mode, c / static_cast<double>(mode.eigenvalue()));
  }
  return out;
}

double torus_volume(int q) { return std::pow(2.0 * std::numbers::pi, 2 * q); }

double l2_inner(const TrigPolynomial& f, const TrigPolynomial& h) {
  require_same_q(f, h, "l2_inner");
  const TrigPolynomial& small = f.size() <= h.size() ? f : h;
  const TrigPolynomial& large = f.size() <= h.size() ? h : f;
  double sum = 0.0;
  double constant = 0.0;
  for (const auto& [mode, c] : small.terms()) {
    auto it = large.terms().find(mode);
    if (it == large.terms().end()) continue;
    if (mode.is_constant()) {
      constant += c * it->second;
    } else {
      sum += c * it->second;
    }
  }
  const double vol = torus_volume(f.q());
  return 0.5 * vol * sum + vol * constant;
}

double right_inner(const TrigPolynomial& f, const TrigPolynomial& h) {
  require_same_q(f, h, "right_inner");
  return l2_inner(laplacian(f), h);
}

double ad_invariance_defect(const TrigPolynomial& f, const TrigPolynomial& h,
                            const TrigPolynomial& g) {
  require_same_q(f, h, "ad_invariance_defect");
  require_same_q(f, g, "ad_invariance_defect");
  return l2_inner(poisson_bracket(g, f), h) + l2_inner(f, poisson_bracket(g, h));
}

double max_coeff_distance(const TrigPolynomial& a, const TrigPolynomial& b) {
  require_same_q(a, b, "max_coeff_distance");
  double r = 0.0;
  for (const auto& [mode, c] : a.terms()) r = std::max(r, std::abs(c - b.coeff(mode)));
  for (const auto& [mode, c] : b.terms()) {
    if (a.terms().find(mode) == a.terms().end()) r = std::max(r, std::abs(c));
  }
  return r;
}

}  // namespace symplecto::trig
