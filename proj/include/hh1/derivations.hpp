#pragma once

#include <memory>
#include <vector>

#include "hh1/algebra.hpp"
#include "hh1/lie.hpp"

namespace hh1 {

// A derivation of A as a dim x dim matrix; Leibniz-verified on construction.
struct DerivationMatrix {
  Matrix m;
  bool e_normalized = false;  // vanishes on every vertex idempotent
};

DerivationMatrix make_derivation(const ScAlgebra& a, Matrix m);  // throws NotADerivation

// [c, -] as a matrix
Matrix inner_derivation_matrix(const ScAlgebra& a, const Vec& c);

// F - [c, -] with c = sum_j F(e_j) e_j; vanishes on every vertex idempotent,
// same class in HH^1
DerivationMatrix normalize_derivation(const ScAlgebra& a, const Matrix& f);

// F - [[F(e), e], -]; vanishes at the single idempotent e
Matrix normalize_at_idempotent(const ScAlgebra& a, const Matrix& f, const Vec& e);

// The space of derivations vanishing on E = span of vertex idempotents,
// solved by the parallel-path method: unknowns are the coefficients of each
// f(arrow) over the corner basis parallel to the arrow.
class DerivationSpace {
 public:
  const FdAlgebra& algebra() const { return *alg_; }
  const Subspace& space() const { return space_; }  // solutions, arrow coords
  std::size_t unknowns() const { return flat_.size(); }
  const std::vector<std::vector<int>>& slots() const { return slots_; }

  // full derivation matrix from arrow coordinates (Leibniz-verified)
  DerivationMatrix materialize(const Vec& arrow_coords) const;
  // inverse: read the arrow columns of an E-normalized derivation
  Vec arrow_coords(const Matrix& f) const;

  // arrow-coordinate positions whose corner basis path is shorter than m
  std::vector<std::size_t> positions_below_length(int m) const;

 private:
  friend DerivationSpace derivations_E_shared(std::shared_ptr<const FdAlgebra> a);
  std::shared_ptr<const FdAlgebra> alg_;
  std::vector<std::vector<int>> slots_;    // per arrow: corner basis indices
  std::vector<std::pair<int, int>> flat_;  // unknown -> (arrow, corner basis index)
  std::vector<std::size_t> offset_;        // arrow -> first unknown
  Subspace space_{0, Field::rationals()};
};

DerivationSpace derivations_E_shared(std::shared_ptr<const FdAlgebra> a);
inline DerivationSpace derivations_E(const FdAlgebra& a) {
  return derivations_E_shared(std::make_shared<const FdAlgebra>(a));
}

// span of [c, -] for c in C_A(E), in arrow coordinates; dim = dim C_A(E) - dim Z(A)
Subspace inner_derivations_E(const DerivationSpace& der);

// D_m: solutions with every f(arrow) supported on basis paths of length >= m
Subspace d_filtration(const DerivationSpace& der, int m);

// HH^1(A) = Der_E(A) / IDer_E(A) with representatives and Lie structure constants.
// Self-contained: holds a shared copy of the algebra.
class HH1Algebra {
 public:
  const FdAlgebra& algebra() const { return der_.algebra(); }
  const DerivationSpace& derivation_space() const { return der_; }
  const Subspace& inner() const { return inner_; }
  const LieSC& lie() const { return lie_; }
  int dim() const { return (int)reps_.size(); }
  const std::vector<DerivationMatrix>& representatives() const { return reps_; }
  const std::vector<Vec>& representative_coords() const { return proj_.complement(); }

  // HH^1 coordinates of the class of a derivation matrix (E-normalizes first)
  Vec class_of_matrix(const Matrix& f) const;
  // HH^1 coordinates from arrow coordinates of an E-normalized derivation
  Vec class_of_coords(const Vec& arrow_coords) const;

 private:
  friend HH1Algebra hh1_shared(std::shared_ptr<const FdAlgebra> a);
  DerivationSpace der_;
  Subspace inner_{0, Field::rationals()};
  QuotientDecomposition proj_;
  std::vector<DerivationMatrix> reps_;
  LieSC lie_;
};

HH1Algebra hh1_shared(std::shared_ptr<const FdAlgebra> a);
inline HH1Algebra hh1_of(const FdAlgebra& a) {
  return hh1_shared(std::make_shared<const FdAlgebra>(a));
}

// Independent brute-force oracle: the full Leibniz system over all dim^2
// unknowns, inner derivations from all basis brackets.
class GenericHH1 {
 public:
  const ScAlgebra& algebra() const { return alg_; }
  const Subspace& der() const { return der_; }
  const Subspace& ider() const { return ider_; }
  const LieSC& lie() const { return lie_; }
  int dim() const { return (int)reps_.size(); }
  bool solvable() const { return solvable_; }
  const std::vector<Matrix>& representatives() const { return reps_; }

  Vec class_of(const Matrix& f) const;  // membership-checked projection

 private:
  friend GenericHH1 hh1_generic(const ScAlgebra& a);
  friend Subspace hh1_radical_preserving_image(const GenericHH1& g);
  ScAlgebra alg_;
  Subspace der_{0, Field::rationals()};
  Subspace ider_{0, Field::rationals()};
  QuotientDecomposition proj_;
  std::vector<Matrix> reps_;
  LieSC lie_;
  bool solvable_ = false;
};

GenericHH1 hh1_generic(const ScAlgebra& a);

// image of D_m in HH^1 coordinates: HH^1_(m)
Subspace hh1_filtration_image(const HH1Algebra& h, int m);

struct TruncationMap {
  TruncatedAlgebra truncated;  // A / J^2 with its quotient map
  HH1Algebra target;           // HH^1(A/J^2)
  Matrix phi;                  // HH^1(A) -> HH^1(A/J^2)
  Subspace phi_kernel;
};

// requires a loop-free Ext-quiver (throws HasLoops)
TruncationMap truncation_map(const FdAlgebra& a, const HH1Algebra& h);

struct SchurMap {
  CornerAlgebra corner;
  GenericHH1 corner_hh1;
  Matrix map;  // HH^1(A) -> HH^1(eAe)
};

SchurMap schur_map(const FdAlgebra& a, const HH1Algebra& h, const std::vector<int>& vertices);
// nested version: restrict classes of a generic HH^1 to a corner of its algebra
SchurMap schur_map_generic(const GenericHH1& g, const std::vector<int>& vertices);

// class of rep^p in HH^1 coordinates; requires F_p (throws NotPrimeField)
Vec p_power_map(const HH1Algebra& h, int class_index);
Vec p_power_of_matrix(const HH1Algebra& h, const Matrix& f);

// HH^1_(1) of a structure-constant algebra: image in the generic HH^1 of the
// derivations preserving the radical
Subspace hh1_radical_preserving_image(const GenericHH1& g);

}  // namespace hh1
