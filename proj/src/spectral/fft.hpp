#pragma once

// Thin RAII wrapper over FFTW's 2-D real transforms. Plans are created once
// per resolution under a lock (the FFTW planner is not thread-safe) and then
// executed with the new-array interface, which is. Callers own their buffers.

#include <complex>
#include <memory>

namespace symplecto::spectral::detail {

class FftPlan {
 public:
  explicit FftPlan(int n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  int n() const { return n_; }
  /// Unnormalised r2c: out has n * (n/2 + 1) entries.
  void forward(const double* in, std::complex<double>* out) const;
  /// Unnormalised c2r; destroys `in`.
  void inverse(std::complex<double>* in, double* out) const;

 private:
  int n_;
  void* forward_;
  void* inverse_;
};

std::shared_ptr<const FftPlan> plan_for(int n);

}  // namespace symplecto::spectral::detail
