#include "symplecto/sphere/wigner.hpp"

#include <array>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <map>
#include <mutex>

namespace symplecto::sphere {

namespace mp = boost::multiprecision;

namespace {

mp::cpp_int factorial(int n) {
  static std::mutex mutex;
  static std::vector<mp::cpp_int> table{1};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[n];
}

double evaluate(const Wigner3jArg& a) {
  const auto [j1, j2, j3, m1, m2, m3] = a;
  if (j1 < 0 || j2 < 0 || j3 < 0) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;
  if (m1 + m2 + m3 != 0) return 0.0;
  if (j3 > j1 + j2 || j3 < std::abs(j1 - j2)) return 0.0;
  // (j1 j2 j3; 0 0 0) vanishes for odd j1 + j2 + j3.
  if (m1 == 0 && m2 == 0 && m3 == 0 && (j1 + j2 + j3) % 2 != 0) return 0.0;

  const mp::cpp_rational triangle(factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) *
                                      factorial(-j1 + j2 + j3),
                                  factorial(j1 + j2 + j3 + 1));
  const mp::cpp_int orders = factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) *
                             factorial(j2 - m2) * factorial(j3 + m3) * factorial(j3 - m3);

  const int kmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int kmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
  mp::cpp_rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    const mp::cpp_int den = factorial(k) * factorial(j3 - j2 + k + m1) *
                            factorial(j3 - j1 + k - m2) * factorial(j1 + j2 - j3 - k) *
                            factorial(j1 - k - m1) * factorial(j2 - k + m2);
    const mp::cpp_rational term(1, den);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum == 0) return 0.0;

  const mp::cpp_rational square = sum * sum * triangle * mp::cpp_rational(orders);
  using Float = mp::cpp_bin_float_50;
  const Float magnitude = mp::sqrt(Float(mp::numerator(square)) / Float(mp::denominator(square)));
  const int phase = ((j1 - j2 - m3) % 2 + 2) % 2 == 0 ? 1 : -1;
  const int sign = sum > 0 ? phase : -phase;
  return sign * magnitude.convert_to<double>();
}

}  // namespace

double wigner3j(const Wigner3jArg& a) {
  static std::mutex mutex;
  static std::map<std::array<int, 6>, double> cache;
  const std::array<int, 6> key{a.j1, a.j2, a.j3, a.m1, a.m2, a.m3};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double v = evaluate(a);
  std::lock_guard lock(mutex);
  cache.emplace(key, v);
  return v;
}

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  return wigner3j(Wigner3jArg{j1, j2, j3, m1, m2, m3});
}

}  // namespace symplecto::sphere
