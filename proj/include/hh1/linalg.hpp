#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hh1/kernels.hpp"
#include "hh1/matrix.hpp"

namespace hh1 {

// unique reduced row-echelon form and its pivot columns
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m,
                                                 kernels::Exec e = kernels::default_exec());

std::size_t rank(const Matrix& m);

// A subspace of k^n held as RREF basis rows with strictly increasing pivots.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim, const Field& f)
      : ambient_(ambient_dim), field_(f) {}

  static Subspace from_rows(std::size_t ambient_dim, const Field& f, const std::vector<Vec>& rows);
  static Subspace full(std::size_t ambient_dim, const Field& f);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // residual of v after elimination against the basis; zero iff v is a member
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  // inserts v if independent, restoring the RREF invariant; true if dim grew
  bool insert(const Vec& v);

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;  // Zassenhaus

 private:
  std::size_t ambient_;
  Field field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// basis of the right null space; dim = cols - rank
Subspace kernel(const Matrix& m);

// Complement data for ambient = sub (+) C, with the canonical greedy choice of
// C among the ambient basis rows, and the projection ambient -> C-coordinates.
class QuotientDecomposition {
 public:
  const std::vector<Vec>& complement() const { return complement_; }
  std::size_t dim() const { return complement_.size(); }

  // coordinates of x over the complement basis (throws if x is not in ambient)
  Vec coords(const Vec& x) const;

  // x minus its sub-component, i.e. the complement representative of x's class
  Vec project(const Vec& x) const;

 private:
  friend QuotientDecomposition quotient_basis(const Subspace&, const Subspace&);
  std::vector<Vec> complement_;   // chosen ambient rows
  std::vector<Vec> solver_rows_;  // [complement; sub basis], RREF'd transpose data
  Matrix t_;                      // elimination transform of the stacked transpose
  std::vector<std::size_t> pivot_row_of_col_;
  std::size_t stacked_cols_ = 0;
  Field field_ = Field::rationals();
};

// throws SubspaceNotContained if sub is not inside ambient
QuotientDecomposition quotient_basis(const Subspace& ambient, const Subspace& sub);

// one solution of A x = b with free variables set to zero, if consistent
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// monic characteristic polynomial det(xI - m), coefficients low to high;
// Samuelson-Berkowitz, division-free, valid over any field
std::vector<FieldElem> char_poly(const Matrix& m);

// evaluate a polynomial (coefficients low to high) at a square matrix
Matrix poly_at_matrix(const std::vector<FieldElem>& coeffs, const Matrix& m);

struct Eigenpair {
  FieldElem value;
  Subspace space;
};

// all eigenvalues of m lying in the base field, in canonical order
// (F_p: residue order; Q: numeric order), each with its eigenspace
std::vector<Eigenpair> eigenvalues_in_field(const Matrix& m);

}  // namespace hh1
