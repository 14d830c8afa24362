// Benchmark comparing the OpenMP kernels against their serial references.
// Outputs are also compared for equality, so a run doubles as a smoke test.

#include <cstdio>
#include <string>

#include <omp.h>

#include "hh1/kernels.hpp"
#include "hh1/linalg.hpp"
#include "hh1/rng.hpp"

using namespace hh1;

namespace {

Matrix random_matrix(std::size_t n, const Field& f, Rng& rng, long long bound) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.field_elem(f, bound);
  return m;
}

// structure constants of k[x]/(x^n): x^i * x^j = x^{i+j} or 0
kernels::SparseProducts trunc_poly_products(int n, const Field& f) {
  kernels::SparseProducts prod((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) prod[(std::size_t)i * n + j].emplace_back(i + j, f.one());
  return prod;
}

// bracket table of gl_k via matrix units: [E_ab, E_cd] = d_bc E_ad - d_da E_cb
kernels::BracketTable gl_table(int k, const Field& f) {
  const int n = k * k;
  auto unit = [&](int a, int b) { return a * k + b; };
  kernels::BracketTable g((std::size_t)n, std::vector<Vec>((std::size_t)n));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          Vec v = zero_vec((std::size_t)n, f);
          if (b == c) v[(std::size_t)unit(a, d)] += f.one();
          if (d == a) v[(std::size_t)unit(c, b)] -= f.one();
          g[(std::size_t)unit(a, b)][(std::size_t)unit(c, d)] = v;
        }
  return g;
}

struct Row {
  const char* name;
  double serial_s, parallel_s;
  bool equal;
};

template <typename F, typename G>
Row time_pair(const char* name, F&& serial, G&& parallel) {
  double t0 = omp_get_wtime();
  auto a = serial();
  double t1 = omp_get_wtime();
  auto b = parallel();
  double t2 = omp_get_wtime();
  return {name, t1 - t0, t2 - t1, a == b};
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s %6s\n", "kernel", "serial[s]", "openmp[s]", "speedup", "equal");

  std::vector<Row> rows;
  {
    Rng rng(7);
    Field f = Field::prime(1009);
    Matrix a = random_matrix(160, f, rng, 0), b = random_matrix(160, f, rng, 0);
    rows.push_back(time_pair(
        "mat_mul F_p 160x160", [&] { return kernels::mat_mul_serial(a, b); },
        [&] { return kernels::mat_mul_parallel(a, b); }));
  }
  {
    Rng rng(11);
    Field f = Field::rationals();
    Matrix a = random_matrix(56, f, rng, 9), b = random_matrix(56, f, rng, 9);
    rows.push_back(time_pair(
        "mat_mul Q 56x56", [&] { return kernels::mat_mul_serial(a, b); },
        [&] { return kernels::mat_mul_parallel(a, b); }));
  }
  {
    Rng rng(13);
    Field f = Field::prime(1009);
    Matrix a = random_matrix(240, f, rng, 0);
    rows.push_back(time_pair(
        "rref F_p 240x240",
        [&] {
          Matrix m(a);
          kernels::rref_inplace_serial(m);
          return m;
        },
        [&] {
          Matrix m(a);
          kernels::rref_inplace_parallel(m);
          return m;
        }));
  }
  {
    Field f = Field::prime(97);
    auto prod = trunc_poly_products(48, f);
    rows.push_back(time_pair(
        "assoc scan dim 48",
        [&] { return !kernels::assoc_defect_serial(prod, 48, f).has_value(); },
        [&] { return !kernels::assoc_defect_parallel(prod, 48, f).has_value(); }));
  }
  {
    Field f = Field::prime(97);
    auto g = gl_table(6, f);
    rows.push_back(time_pair(
        "jacobi scan gl_6 (dim 36)",
        [&] { return !kernels::jacobi_defect_serial(g, f).has_value(); },
        [&] { return !kernels::jacobi_defect_parallel(g, f).has_value(); }));
  }
  {
    Field f = Field::prime(97);
    auto g = gl_table(5, f);
    std::vector<Matrix> ad;
    const int n = 25;
    for (int i = 0; i < n; ++i) {
      Matrix m((std::size_t)n, (std::size_t)n, f);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          m.at((std::size_t)k, (std::size_t)j) = g[(std::size_t)i][(std::size_t)j][(std::size_t)k];
      ad.push_back(std::move(m));
    }
    rows.push_back(time_pair(
        "killing gl_5 (dim 25)", [&] { return kernels::killing_matrix_serial(ad, f); },
        [&] { return kernels::killing_matrix_parallel(ad, f); }));
  }

  bool all_equal = true;
  for (const auto& r : rows) {
    std::printf("%-28s %10.4f %10.4f %7.2fx %6s\n", r.name, r.serial_s, r.parallel_s,
                r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0.0, r.equal ? "yes" : "NO");
    all_equal = all_equal && r.equal;
  }
  if (!all_equal) {
    std::printf("MISMATCH between serial and parallel kernels\n");
    return 1;
  }
  return 0;
}
