#include "symplecto/sphere/structure_constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "symplecto/errors.hpp"
#include "symplecto/sphere/wigner.hpp"

namespace symplecto::sphere {

namespace {

constexpr double kZero = 1e-15;

bool admissible(int n, int m, int k, int l, int i, int j) {
  return n >= 1 && k >= 1 && std::abs(m) <= n && std::abs(l) <= k && i >= 0 &&
         std::abs(j) <= i && j == m + l;
}

double sign_pow(int e) { return e % 2 == 0 ? 1.0 : -1.0; }

// sqrt(prod_{t=0}^{2p} (n - |m| - t) / (n + |m| - t))
double ladder_ratio(int n, int m, int p) {
  const int a = std::abs(m);
  double r = 1.0;
  for (int t = 0; t <= 2 * p; ++t) r *= static_cast<double>(n - a - t) / (n + a - t);
  return std::sqrt(r);
}

}  // namespace

std::complex<double> double_sum_constant(int n, int m, int k, int l, int i, int j) {
  if (!admissible(n, m, k, l, i, j)) return 0.0;
  double s1 = 0.0;
  for (int p = 0; n - 2 * p - 1 >= std::abs(m); ++p) {
    const int np = n - 2 * p - 1;
    s1 += (2 * np + 1) * ladder_ratio(n, m, p) * wigner3j(np, k, i, m, l, -j) *
          wigner3j(np, k, i, 0, 0, 0);
  }
  double s2 = 0.0;
  for (int q = 0; k - 2 * q - 1 >= std::abs(l); ++q) {
    const int kq = k - 2 * q - 1;
    s2 += (2 * kq + 1) * ladder_ratio(k, l, q) * wigner3j(n, kq, i, m, l, -j) *
          wigner3j(n, kq, i, 0, 0, 0);
  }
  // Degree of the result, 2i+1, under the root.
  const double pre = sign_pow(j) * std::sqrt((2 * n + 1) * (2 * k + 1) * (2 * i + 1) / (4 * M_PI));
  return {0.0, -pre * (l * s1 - m * s2)};
}

std::complex<double> gradient_coupling_constant(int n, int m, int k, int l, int i, int j) {
  if (!admissible(n, m, k, l, i, j) || (n + k + i) % 2 == 0) return 0.0;
  const double pre = sign_pow(j) * std::sqrt(n * (n + 1.0) * k * (k + 1.0)) *
                     std::sqrt((2 * n + 1) * (2 * k + 1) * (2 * i + 1) / (4 * M_PI));
  return {0.0, pre * wigner3j(n, k, i, m, l, -j) * wigner3j(n, k, i, 1, -1, 0)};
}

std::complex<double> structure_constant(int n, int m, int k, int l, int i, int j) {
  if (m * l >= 0) return double_sum_constant(n, m, k, l, i, j);
  return gradient_coupling_constant(n, m, k, l, i, j);
}

std::complex<double> StructureConstantTable::at(int n, int m, int k, int l, int i, int j) const {
  auto it = entries.find({n, m, k, l});
  if (it == entries.end()) return 0.0;
  auto jt = it->second.find({i, j});
  return jt == it->second.end() ? 0.0 : jt->second;
}

double StructureConstantTable::antisymmetry_defect() const {
  double r = 0.0;
  for (const auto& [key, row] : entries) {
    const auto [n, m, k, l] = key;
    for (const auto& [ij, c] : row) r = std::max(r, std::abs(c + at(k, l, n, m, ij.first, ij.second)));
  }
  return r;
}

std::size_t StructureConstantTable::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& [key, row] : entries) c += row.size();
  return c;
}

TableValidation validate_table(const StructureConstantTable& table, double tolerance) {
  TableValidation v;
  const SphereQuadrature quad = SphereQuadrature::for_degree(4 * table.lmax);
  for (int n = 1; n <= table.lmax; ++n) {
    for (int m = -n; m <= n; ++m) {
      for (int k = 1; k <= table.lmax; ++k) {
        for (int l = -k; l <= k; ++l) {
          const HarmonicExpansion f{{{SphericalIndex(n, m), 1.0}}};
          const HarmonicExpansion h{{{SphericalIndex(k, l), 1.0}}};
          const auto b = sample_bracket(f, h, quad);

          double covered = 0.0;
          HarmonicExpansion rebuilt;
          for (int i = 0; i <= n + k; ++i) {
            for (int j = -i; j <= i; ++j) {
              const SphericalIndex idx(i, j);
              const std::complex<double> projected = quad.project(b, idx);
              const std::complex<double> c = table.at(n, m, k, l, i, j);
              v.max_projection_error = std::max(v.max_projection_error, std::abs(projected - c));
              covered += std::norm(projected);
              if (c != 0.0) rebuilt.terms.push_back({idx, c});
            }
          }
          std::vector<double> sq(b.size());
          for (std::size_t t = 0; t < b.size(); ++t) sq[t] = std::norm(b[t]);
          const double total = quad.integrate<double>(sq);
          v.max_coverage_residual = std::max(v.max_coverage_residual, std::abs(total - covered));

          std::size_t t = 0;
          for (int iz = 0; iz < quad.nz(); ++iz) {
            for (int ip = 0; ip < quad.nphi(); ++ip, ++t) {
              const std::complex<double> value = rebuilt.jet(quad.z(iz), quad.phi(ip)).v;
              v.max_pointwise_error = std::max(v.max_pointwise_error, std::abs(value - b[t]));
            }
          }
          ++v.pairs_checked;
        }
      }
    }
  }
  const double worst =
      std::max({v.max_projection_error, v.max_pointwise_error, v.max_coverage_residual});
  if (worst > tolerance) {
    throw FormulaTranscriptionError(
        "structure constants disagree with quadrature: projection error " +
        std::to_string(v.max_projection_error) + ", pointwise error " +
        std::to_string(v.max_pointwise_error) + ", coverage residual " +
        std::to_string(v.max_coverage_residual) + " (tolerance " + std::to_string(tolerance) +
        ")");
  }
  return v;
}

StructureConstantTable structure_constants(int lmax, bool validate, unsigned threads) {
  if (lmax < 1) throw DomainError("structure_constants: lmax must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(lmax));

  // Worker w takes degrees n = w+1, w+1+threads, ...; rows are merged after.
  std::vector<StructureConstantTable> parts(threads);
  auto work = [lmax, threads, &parts](unsigned w) {
    auto& part = parts[w];
    for (int n = static_cast<int>(w) + 1; n <= lmax; n += static_cast<int>(threads)) {
      for (int m = -n; m <= n; ++m) {
        for (int k = 1; k <= lmax; ++k) {
          for (int l = -k; l <= k; ++l) {
            std::map<std::pair<int, int>, std::complex<double>> row;
            const int j = m + l;
            for (int i = std::max(std::abs(n - k) + 1, std::abs(j)); i <= n + k - 1; ++i) {
              const std::complex<double> c = structure_constant(n, m, k, l, i, j);
              if (std::abs(c) > kZero) row.emplace(std::pair{i, j}, c);
            }
            if (!row.empty()) part.entries.emplace(std::array{n, m, k, l}, std::move(row));
          }
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  StructureConstantTable table;
  table.lmax = lmax;
  for (auto& part : parts) table.entries.merge(part.entries);
  if (validate) validate_table(table);
  return table;
}

}  // namespace symplecto::sphere
