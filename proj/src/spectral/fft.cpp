#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace symplecto::spectral::detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
  std::vector<double> real(static_cast<std::size_t>(n) * n);
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(n) * (n / 2 + 1));
  auto* c = reinterpret_cast<fftw_complex*>(spec.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard lock(planner_mutex());
  forward_ = fftw_plan_dft_r2c_2d(n, n, real.data(), c, flags);
  inverse_ = fftw_plan_dft_c2r_2d(n, n, c, real.data(), flags);
}

FftPlan::~FftPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_));
}

void FftPlan::forward(const double* in, std::complex<double>* out) const {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_), const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void FftPlan::inverse(std::complex<double>* in, double* out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_), reinterpret_cast<fftw_complex*>(in), out);
}

std::shared_ptr<const FftPlan> plan_for(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::shared_ptr<const FftPlan>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const FftPlan>(n);
  return slot;
}

}  // namespace symplecto::spectral::detail
