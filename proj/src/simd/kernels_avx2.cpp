// AVX2 variants. This translation unit is the only one built with -mavx2;
// nothing here may run unless cpu_supports_avx2() returned true.

#include <immintrin.h>

#include <cmath>

#include "symplecto/simd/kernels.hpp"

namespace symplecto::simd {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void diff_product(const double* a, const double* b, const double* c, const double* d,
                  double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(ab, cd));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void swap_mul(const double* in, const double* s, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // (re0, im0, re1, im1) -> (im0, re0, im1, re1)
    const __m256d swapped = _mm256_permute_pd(_mm256_loadu_pd(in + i), 0b0101);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(s + i), swapped));
  }
  for (; i + 1 < n; i += 2) {
    const double re = in[i];
    const double im = in[i + 1];
    out[i] = s[i] * im;
    out[i + 1] = s[i + 1] * re;
  }
}

void mul(const double* x, const double* s, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(s + i)));
  }
  for (; i < n; ++i) out[i] = x[i] * s[i];
}

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ax = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    const __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(ax, by));
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

double weighted_dot(const double* x, const double* y, const double* w, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(w + i),
                                     _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    const __m256d p1 =
        _mm256_mul_pd(_mm256_loadu_pd(w + i + 4),
                      _mm256_mul_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    acc0 = _mm256_add_pd(acc0, p0);
    acc1 = _mm256_add_pd(acc1, p1);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += w[i] * x[i] * y[i];
  return sum;
}

double power_sum(const double* x, int k, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    __m256d p = v;
    for (int e = 1; e < k; ++e) p = _mm256_mul_pd(p, v);
    acc = _mm256_add_pd(acc, p);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    double p = x[i];
    for (int e = 1; e < k; ++e) p *= x[i];
    sum += p;
  }
  return sum;
}

double max_abs(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(x[i]));
  return r;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", diff_product, swap_mul, mul,
                                 axpby,  weighted_dot, power_sum, max_abs};
  return table;
}

}  // namespace symplecto::simd
