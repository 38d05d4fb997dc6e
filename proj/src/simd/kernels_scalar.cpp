#include <cmath>

#include "symplecto/simd/kernels.hpp"

namespace symplecto::simd {

namespace {

void diff_product(const double* a, const double* b, const double* c, const double* d,
                  double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void swap_mul(const double* in, const double* s, double* out, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    const double re = in[i];
    const double im = in[i + 1];
    out[i] = s[i] * im;
    out[i + 1] = s[i + 1] * re;
  }
}

void mul(const double* x, const double* s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * s[i];
}

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

double weighted_dot(const double* x, const double* y, const double* w, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += w[i] * x[i] * y[i];
  return sum;
}

double power_sum(const double* x, int k, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = x[i];
    for (int e = 1; e < k; ++e) p *= x[i];
    sum += p;
  }
  return sum;
}

double max_abs(const double* x, std::size_t n) {
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r = std::fmax(r, std::fabs(x[i]));
  return r;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", diff_product, swap_mul, mul,
                                 axpby,    weighted_dot, power_sum, max_abs};
  return table;
}

}  // namespace symplecto::simd
