#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hh1/matrix.hpp"

namespace hh1::kernels {

// Every kernel has an OpenMP implementation and a serial reference.
// The serial versions are the reference; tests assert both agree.
enum class Exec { Serial, Parallel };

Exec default_exec();

// ---- dense exact matrix product -------------------------------------------
Matrix mat_mul_serial(const Matrix& a, const Matrix& b);
Matrix mat_mul_parallel(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b, Exec e = default_exec());

inline Matrix commutator(const Matrix& a, const Matrix& b, Exec e = default_exec()) {
  return mat_mul(a, b, e) - mat_mul(b, a, e);
}

// ---- Gauss-Jordan elimination sweep ----------------------------------------
// Row-reduces m in place to its unique RREF; returns pivot column indices.
// The per-pivot elimination across rows is the data-parallel loop.
std::vector<std::size_t> rref_inplace_serial(Matrix& m);
std::vector<std::size_t> rref_inplace_parallel(Matrix& m);
std::vector<std::size_t> rref_inplace(Matrix& m, Exec e = default_exec());

// ---- exhaustive scans over basis tuples ------------------------------------
// Sparse product rows of a structure-constant algebra: product[u*dim+v] lists
// (w, coeff) with b_u * b_v = sum coeff * b_w.
using SparseProducts = std::vector<std::vector<std::pair<int, FieldElem>>>;

// first (u,v,w) with (b_u b_v) b_w != b_u (b_v b_w), if any
std::optional<std::array<int, 3>> assoc_defect_serial(const SparseProducts& prod, int dim,
                                                      const Field& f);
std::optional<std::array<int, 3>> assoc_defect_parallel(const SparseProducts& prod, int dim,
                                                        const Field& f);
std::optional<std::array<int, 3>> assoc_defect(const SparseProducts& prod, int dim, const Field& f,
                                               Exec e = default_exec());

// first (u,v) violating F(b_u b_v) = F(b_u) b_v + b_u F(b_v), if any
std::optional<std::array<int, 2>> leibniz_defect_serial(const SparseProducts& prod,
                                                        const Matrix& F);
std::optional<std::array<int, 2>> leibniz_defect_parallel(const SparseProducts& prod,
                                                          const Matrix& F);
std::optional<std::array<int, 2>> leibniz_defect(const SparseProducts& prod, const Matrix& F,
                                                 Exec e = default_exec());

// Lie structure tensor gamma[i][j] = coordinates of [x_i, x_j];
// first triple violating the Jacobi identity, if any
using BracketTable = std::vector<std::vector<Vec>>;
std::optional<std::array<int, 3>> jacobi_defect_serial(const BracketTable& g, const Field& f);
std::optional<std::array<int, 3>> jacobi_defect_parallel(const BracketTable& g, const Field& f);
std::optional<std::array<int, 3>> jacobi_defect(const BracketTable& g, const Field& f,
                                                Exec e = default_exec());

// kappa[i][j] = trace(ad_i ad_j) from precomputed adjoint matrices
Matrix killing_matrix_serial(const std::vector<Matrix>& ad, const Field& f);
Matrix killing_matrix_parallel(const std::vector<Matrix>& ad, const Field& f);
Matrix killing_matrix(const std::vector<Matrix>& ad, const Field& f, Exec e = default_exec());

}  // namespace hh1::kernels
