#include "hh1/kernels.hpp"

#include <cstdint>
#include <limits>

#include <omp.h>

namespace hh1::kernels {

Exec default_exec() { return Exec::Parallel; }

// ---------------------------------------------------------------- mat_mul

Matrix mat_mul_serial(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix mat_mul_parallel(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols(), a.field());
  const std::int64_t n = (std::int64_t)a.rows();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem& aik = a.at((std::size_t)i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) c.at((std::size_t)i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, Exec e) {
  return e == Exec::Serial ? mat_mul_serial(a, b) : mat_mul_parallel(a, b);
}

// ---------------------------------------------------------------- rref

namespace {

template <bool Parallel>
std::vector<std::size_t> rref_impl(Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    FieldElem inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) = m.at(r, j) * inv;

    if constexpr (Parallel) {
      const std::int64_t nrows = (std::int64_t)rows;
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < nrows; ++i) {
        if ((std::size_t)i == r) continue;
        const FieldElem f = m.at((std::size_t)i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols; ++j)
          if (!m.at(r, j).is_zero()) m.at((std::size_t)i, j) -= f * m.at(r, j);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        const FieldElem f = m.at(i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols; ++j)
          if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_inplace_serial(Matrix& m) { return rref_impl<false>(m); }
std::vector<std::size_t> rref_inplace_parallel(Matrix& m) { return rref_impl<true>(m); }
std::vector<std::size_t> rref_inplace(Matrix& m, Exec e) {
  return e == Exec::Serial ? rref_inplace_serial(m) : rref_inplace_parallel(m);
}

// ---------------------------------------------------------------- scans

namespace {

// b_u * (sparse vector) in basis coordinates
Vec mul_left(const SparseProducts& prod, int dim, const Field& f, int u,
             const std::vector<std::pair<int, FieldElem>>& v) {
  Vec out(dim, f.zero());
  for (const auto& [z, c] : v)
    for (const auto& [w, d] : prod[(std::size_t)u * dim + z]) out[w] += c * d;
  return out;
}

Vec mul_right(const SparseProducts& prod, int dim, const Field& f,
              const std::vector<std::pair<int, FieldElem>>& v, int u) {
  Vec out(dim, f.zero());
  for (const auto& [z, c] : v)
    for (const auto& [w, d] : prod[(std::size_t)z * dim + u]) out[w] += c * d;
  return out;
}

bool assoc_ok(const SparseProducts& prod, int dim, const Field& f, int u, int v, int w) {
  Vec lhs = mul_right(prod, dim, f, prod[(std::size_t)u * dim + v], w);
  Vec rhs = mul_left(prod, dim, f, u, prod[(std::size_t)v * dim + w]);
  return lhs == rhs;
}

bool leibniz_ok(const SparseProducts& prod, const Matrix& F, int u, int v) {
  const Field& f = F.field();
  const int dim = (int)F.rows();
  Vec lhs(dim, f.zero());  // F(b_u b_v)
  for (const auto& [w, c] : prod[(std::size_t)u * dim + v])
    for (int r = 0; r < dim; ++r)
      if (!F.at(r, w).is_zero()) lhs[r] += c * F.at(r, w);
  Vec rhs(dim, f.zero());  // F(b_u) b_v + b_u F(b_v)
  for (int r = 0; r < dim; ++r) {
    if (!F.at(r, u).is_zero())
      for (const auto& [w, c] : prod[(std::size_t)r * dim + v]) rhs[w] += F.at(r, u) * c;
    if (!F.at(r, v).is_zero())
      for (const auto& [w, c] : prod[(std::size_t)u * dim + r]) rhs[w] += F.at(r, v) * c;
  }
  return lhs == rhs;
}

Vec bracket_coords(const BracketTable& g, const Field& f, const Vec& x, int j) {
  // [x, e_j] for a coordinate vector x
  const int dim = (int)g.size();
  Vec out(dim, f.zero());
  for (int i = 0; i < dim; ++i)
    if (!x[i].is_zero()) vec_axpy(out, x[i], g[i][j]);
  return out;
}

bool jacobi_ok(const BracketTable& g, const Field& f, int i, int j, int k) {
  // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
  Vec s = bracket_coords(g, f, g[i][j], k);
  Vec t = bracket_coords(g, f, g[j][k], i);
  Vec u = bracket_coords(g, f, g[k][i], j);
  for (std::size_t m = 0; m < s.size(); ++m) {
    FieldElem e = s[m] + t[m] + u[m];
    if (!e.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::optional<std::array<int, 3>> assoc_defect_serial(const SparseProducts& prod, int dim,
                                                      const Field& f) {
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v)
      for (int w = 0; w < dim; ++w)
        if (!assoc_ok(prod, dim, f, u, v, w)) return std::array<int, 3>{u, v, w};
  return std::nullopt;
}

std::optional<std::array<int, 3>> assoc_defect_parallel(const SparseProducts& prod, int dim,
                                                        const Field& f) {
  const std::int64_t total = (std::int64_t)dim * dim * dim;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t t = 0; t < total; ++t) {
    int u = (int)(t / ((std::int64_t)dim * dim));
    int v = (int)((t / dim) % dim);
    int w = (int)(t % dim);
    if (!assoc_ok(prod, dim, f, u, v, w) && t < best) best = t;
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return std::array<int, 3>{(int)(best / ((std::int64_t)dim * dim)), (int)((best / dim) % dim),
                            (int)(best % dim)};
}

std::optional<std::array<int, 3>> assoc_defect(const SparseProducts& prod, int dim, const Field& f,
                                               Exec e) {
  return e == Exec::Serial ? assoc_defect_serial(prod, dim, f) : assoc_defect_parallel(prod, dim, f);
}

std::optional<std::array<int, 2>> leibniz_defect_serial(const SparseProducts& prod,
                                                        const Matrix& F) {
  const int dim = (int)F.rows();
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v)
      if (!leibniz_ok(prod, F, u, v)) return std::array<int, 2>{u, v};
  return std::nullopt;
}

std::optional<std::array<int, 2>> leibniz_defect_parallel(const SparseProducts& prod,
                                                          const Matrix& F) {
  const int dim = (int)F.rows();
  const std::int64_t total = (std::int64_t)dim * dim;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 32) reduction(min : best)
  for (std::int64_t t = 0; t < total; ++t) {
    if (!leibniz_ok(prod, F, (int)(t / dim), (int)(t % dim)) && t < best) best = t;
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return std::array<int, 2>{(int)(best / dim), (int)(best % dim)};
}

std::optional<std::array<int, 2>> leibniz_defect(const SparseProducts& prod, const Matrix& F,
                                                 Exec e) {
  return e == Exec::Serial ? leibniz_defect_serial(prod, F) : leibniz_defect_parallel(prod, F);
}

std::optional<std::array<int, 3>> jacobi_defect_serial(const BracketTable& g, const Field& f) {
  const int dim = (int)g.size();
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k)
        if (!jacobi_ok(g, f, i, j, k)) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

std::optional<std::array<int, 3>> jacobi_defect_parallel(const BracketTable& g, const Field& f) {
  const int dim = (int)g.size();
  const std::int64_t total = (std::int64_t)dim * dim * dim;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t t = 0; t < total; ++t) {
    int i = (int)(t / ((std::int64_t)dim * dim));
    int j = (int)((t / dim) % dim);
    int k = (int)(t % dim);
    if (i < j && j < k && !jacobi_ok(g, f, i, j, k) && t < best) best = t;
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return std::array<int, 3>{(int)(best / ((std::int64_t)dim * dim)), (int)((best / dim) % dim),
                            (int)(best % dim)};
}

std::optional<std::array<int, 3>> jacobi_defect(const BracketTable& g, const Field& f, Exec e) {
  return e == Exec::Serial ? jacobi_defect_serial(g, f) : jacobi_defect_parallel(g, f);
}

Matrix killing_matrix_serial(const std::vector<Matrix>& ad, const Field& f) {
  const std::size_t n = ad.size();
  Matrix k((std::size_t)n, (std::size_t)n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FieldElem tr = f.zero();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!ad[i].at(r, c).is_zero() && !ad[j].at(c, r).is_zero())
            tr += ad[i].at(r, c) * ad[j].at(c, r);
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

Matrix killing_matrix_parallel(const std::vector<Matrix>& ad, const Field& f) {
  const std::size_t n = ad.size();
  Matrix k((std::size_t)n, (std::size_t)n, f);
  const std::int64_t total = (std::int64_t)n * (std::int64_t)n;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t t = 0; t < total; ++t) {
    std::size_t i = (std::size_t)(t / (std::int64_t)n), j = (std::size_t)(t % (std::int64_t)n);
    if (j < i) continue;
    FieldElem tr = f.zero();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!ad[i].at(r, c).is_zero() && !ad[j].at(c, r).is_zero())
          tr += ad[i].at(r, c) * ad[j].at(c, r);
    k.at(i, j) = tr;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) k.at(i, j) = k.at(j, i);
  return k;
}

Matrix killing_matrix(const std::vector<Matrix>& ad, const Field& f, Exec e) {
  return e == Exec::Serial ? killing_matrix_serial(ad, f) : killing_matrix_parallel(ad, f);
}

}  // namespace hh1::kernels
