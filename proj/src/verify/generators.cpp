#include "symplecto/verify/generators.hpp"

#include <set>

namespace symplecto::verify {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

namespace {

double draw_coeff(Rng& rng, Coefficients kind) {
  if (kind == Coefficients::Real) {
    double c = 0.0;
    while (std::abs(c) < 1e-3) c = uniform_real(rng, -1.0, 1.0);
    return c;
  }
  int k = 0;
  while (k == 0) k = uniform_int(rng, -8, 8);
  return k / 8.0;
}

std::vector<int> draw_vector(Rng& rng, int q, int w) {
  std::vector<int> v(q);
  for (int& e : v) e = uniform_int(rng, -w, w);
  return v;
}

bool is_zero(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : a) if (v != 0) return false;
  for (int v : b) if (v != 0) return false;
  return true;
}

}  // namespace

trig::TrigPolynomial random_trig(Rng& rng, int q, int max_modes, int w, Coefficients kind) {
  const int count = uniform_int(rng, 1, max_modes);
  trig::TrigPolynomial f(q);
  std::set<trig::TrigMode> used;
  while (static_cast<int>(used.size()) < count) {
    auto n = draw_vector(rng, q, w);
    auto m = draw_vector(rng, q, w);
    if (is_zero(n, m)) continue;
    const auto phase = uniform_int(rng, 0, 1) == 0 ? trig::Phase::Cos : trig::Phase::Sin;
    auto [canon, sign] = trig::canonicalize({n, m, phase});
    if (!used.insert(canon).second) continue;
    f.add(canon, draw_coeff(rng, kind));
  }
  return f;
}

curvature::ModePair random_mode_pair(Rng& rng, int q, int w, bool allow_resonant) {
  while (true) {
    curvature::ModePair p{draw_vector(rng, q, w), draw_vector(rng, q, w), draw_vector(rng, q, w),
                          draw_vector(rng, q, w)};
    if (is_zero(p.n, p.m) || is_zero(p.k, p.l)) continue;
    if (!allow_resonant && p.resonant()) continue;
    return p;
  }
}

std::vector<std::pair<int, int>> wavevectors_with_eigenvalue(long lambda, int w) {
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= w; ++n) {
    for (int m = -w; m <= w; ++m) {
      if (n == 0 && m <= 0) continue;
      if (static_cast<long>(n) * n + static_cast<long>(m) * m == lambda) out.emplace_back(n, m);
    }
  }
  return out;
}

trig::TrigPolynomial random_eigenfunction(Rng& rng, int w, int max_modes, long eigenvalue) {
  const auto vs = wavevectors_with_eigenvalue(eigenvalue, w);
  trig::TrigPolynomial f(1);
  if (vs.empty()) return f;
  const int count = uniform_int(rng, 1, max_modes);
  for (int i = 0; i < count; ++i) {
    const auto [n, m] = vs[uniform_int(rng, 0, static_cast<int>(vs.size()) - 1)];
    const auto phase = uniform_int(rng, 0, 1) == 0 ? trig::Phase::Cos : trig::Phase::Sin;
    f.add({{n}, {m}, phase}, draw_coeff(rng, Coefficients::Real));
  }
  return f;
}

trig::TrigPolynomial random_eigenfunction(Rng& rng, int w, int max_modes) {
  std::vector<long> eigenvalues;
  for (long lambda = 1; lambda <= 2L * w * w; ++lambda) {
    if (!wavevectors_with_eigenvalue(lambda, w).empty()) eigenvalues.push_back(lambda);
  }
  while (true) {
    const long lambda = eigenvalues[uniform_int(rng, 0, static_cast<int>(eigenvalues.size()) - 1)];
    auto f = random_eigenfunction(rng, w, max_modes, lambda);
    if (!f.empty()) return f;
  }
}

}  // namespace symplecto::verify
