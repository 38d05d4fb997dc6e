#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "symplecto/simd/kernels.hpp"

using namespace symplecto::simd;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    avx2_ = avx2_kernels();
    if (avx2_ == nullptr) GTEST_SKIP() << "AVX2 variant unavailable on this CPU or build";
  }
  const KernelTable& scalar() const { return scalar_kernels(); }
  const KernelTable* avx2_ = nullptr;
  std::mt19937_64 rng_{GetParam() * 7919 + 1};
};

}  // namespace

TEST_P(KernelEquivalence, DiffProductBitIdentical) {
  const std::size_t n = GetParam();
  const auto a = random_vector(rng_, n), b = random_vector(rng_, n);
  const auto c = random_vector(rng_, n), d = random_vector(rng_, n);
  std::vector<double> s(n), v(n);
  scalar().diff_product(a.data(), b.data(), c.data(), d.data(), s.data(), n);
  avx2_->diff_product(a.data(), b.data(), c.data(), d.data(), v.data(), n);
  EXPECT_TRUE(bit_equal(s, v));
}

TEST_P(KernelEquivalence, MulAndSwapMulBitIdentical) {
  const std::size_t n = 2 * GetParam();
  const auto x = random_vector(rng_, n), k = random_vector(rng_, n);
  std::vector<double> s(n), v(n);
  scalar().mul(x.data(), k.data(), s.data(), n);
  avx2_->mul(x.data(), k.data(), v.data(), n);
  EXPECT_TRUE(bit_equal(s, v));
  scalar().swap_mul(x.data(), k.data(), s.data(), n);
  avx2_->swap_mul(x.data(), k.data(), v.data(), n);
  EXPECT_TRUE(bit_equal(s, v));
}

TEST_P(KernelEquivalence, AxpbyBitIdentical) {
  const std::size_t n = GetParam();
  const auto x = random_vector(rng_, n), y = random_vector(rng_, n);
  std::vector<double> s(n), v(n);
  scalar().axpby(0.3, x.data(), -1.7, y.data(), s.data(), n);
  avx2_->axpby(0.3, x.data(), -1.7, y.data(), v.data(), n);
  EXPECT_TRUE(bit_equal(s, v));
}

TEST_P(KernelEquivalence, ReductionsAgree) {
  const std::size_t n = GetParam();
  const auto x = random_vector(rng_, n), y = random_vector(rng_, n), w = random_vector(rng_, n);
  const double scale = static_cast<double>(n) * 1e-15;
  EXPECT_NEAR(scalar().weighted_dot(x.data(), y.data(), w.data(), n),
              avx2_->weighted_dot(x.data(), y.data(), w.data(), n), 8 * scale);
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(scalar().power_sum(x.data(), k, n), avx2_->power_sum(x.data(), k, n),
                std::pow(2.0, k) * scale)
        << "k = " << k;
  }
  EXPECT_EQ(scalar().max_abs(x.data(), n), avx2_->max_abs(x.data(), n));
}

INSTANTIATE_TEST_SUITE_P(OddAndEvenLengths, KernelEquivalence,
                         ::testing::Values(1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 127, 1025));

TEST(ScalarKernels, ReferenceValues) {
  const auto& k = scalar_kernels();
  const double x[] = {1.0, -2.0, 3.0};
  const double y[] = {4.0, 5.0, -6.0};
  const double w[] = {1.0, 2.0, 0.5};
  EXPECT_EQ(k.weighted_dot(x, y, w, 3), 4.0 - 20.0 - 9.0);
  EXPECT_EQ(k.power_sum(x, 3, 3), 1.0 - 8.0 + 27.0);
  EXPECT_EQ(k.max_abs(y, 3), 6.0);
  // (1 + 2i) * i*3 with s = (-3, 3): -6 + 3i
  const double c[] = {1.0, 2.0};
  const double s[] = {-3.0, 3.0};
  double out[2];
  k.swap_mul(c, s, out, 2);
  EXPECT_EQ(out[0], -6.0);
  EXPECT_EQ(out[1], 3.0);
}

TEST(Dispatch, ActiveTableIsKnownVariant) {
  const std::string name = active_kernels().name;
  EXPECT_TRUE(name == scalar_kernels().name ||
              (avx2_kernels() != nullptr && name == avx2_kernels()->name));
}
