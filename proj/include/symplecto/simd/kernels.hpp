#pragma once

// Data-parallel inner loops of the pseudo-spectral solver.
//
// Each kernel has a scalar reference implementation and, on x86-64 builds,
// an AVX2 variant. active_kernels() picks the widest variant the running CPU
// supports; setting SYMPLECTO_SIMD=scalar in the environment forces the
// reference path. Elementwise kernels produce bit-identical results across
// variants; reductions agree up to summation order.
//
// Complex arrays are passed as interleaved (re, im) doubles, so `n` always
// counts doubles.

#include <cstddef>
#include <span>

namespace symplecto::simd {

struct KernelTable {
  const char* name;
  /// out[i] = a[i] * b[i] - c[i] * d[i]
  void (*diff_product)(const double* a, const double* b, const double* c, const double* d,
                       double* out, std::size_t n);
  /// out[2j] = s[2j] * in[2j+1], out[2j+1] = s[2j+1] * in[2j]  (n even).
  /// With s = (-k, k) this multiplies complex coefficients by i*k.
  void (*swap_mul)(const double* in, const double* s, double* out, std::size_t n);
  /// out[i] = x[i] * s[i]
  void (*mul)(const double* x, const double* s, double* out, std::size_t n);
  /// out[i] = a * x[i] + b * y[i]
  void (*axpby)(double a, const double* x, double b, const double* y, double* out, std::size_t n);
  /// sum_i w[i] * x[i] * y[i]
  double (*weighted_dot)(const double* x, const double* y, const double* w, std::size_t n);
  /// sum_i x[i]^k, k >= 1
  double (*power_sum)(const double* x, int k, std::size_t n);
  /// max_i |x[i]|
  double (*max_abs)(const double* x, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();
const KernelTable& active_kernels();

bool cpu_supports_avx2();

// Span front ends over the active table.

inline void diff_product(std::span<const double> a, std::span<const double> b,
                         std::span<const double> c, std::span<const double> d,
                         std::span<double> out) {
  active_kernels().diff_product(a.data(), b.data(), c.data(), d.data(), out.data(), out.size());
}

inline void swap_mul(std::span<const double> in, std::span<const double> s,
                     std::span<double> out) {
  active_kernels().swap_mul(in.data(), s.data(), out.data(), out.size());
}

inline void mul(std::span<const double> x, std::span<const double> s, std::span<double> out) {
  active_kernels().mul(x.data(), s.data(), out.data(), out.size());
}

inline void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
                  std::span<double> out) {
  active_kernels().axpby(a, x.data(), b, y.data(), out.data(), out.size());
}

inline double weighted_dot(std::span<const double> x, std::span<const double> y,
                           std::span<const double> w) {
  return active_kernels().weighted_dot(x.data(), y.data(), w.data(), x.size());
}

inline double power_sum(std::span<const double> x, int k) {
  return active_kernels().power_sum(x.data(), k, x.size());
}

inline double max_abs(std::span<const double> x) {
  return active_kernels().max_abs(x.data(), x.size());
}

}  // namespace symplecto::simd
