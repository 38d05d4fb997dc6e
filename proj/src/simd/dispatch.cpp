#include <cstdlib>
#include <string_view>

#include "symplecto/simd/kernels.hpp"

namespace symplecto::simd {

#if defined(SYMPLECTO_HAVE_AVX2)
const KernelTable& avx2_kernel_table();  // kernels_avx2.cpp
#endif

bool cpu_supports_avx2() {
#if defined(SYMPLECTO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(SYMPLECTO_HAVE_AVX2)
  if (cpu_supports_avx2()) return &avx2_kernel_table();
#endif
  return nullptr;
}

const KernelTable& active_kernels() {
  static const KernelTable* table = [] {
    const char* env = std::getenv("SYMPLECTO_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }();
  return *table;
}

}  // namespace symplecto::simd
