#pragma once

#include <map>
#include <string>
#include <vector>

#include "hh1/linalg.hpp"
#include "hh1/presentation.hpp"
#include "hh1/rng.hpp"

namespace hh1 {

// Structure-constant algebra core: basis with endpoints and radical degrees,
// sparse multiplication table, orthogonal idempotents summing to 1.
struct ScAlgebra {
  Field field = Field::rationals();
  int dim = 0;
  kernels::SparseProducts products;  // row u*dim+v = coordinates of b_u * b_v
  std::vector<int> length;           // path length of each basis element
  std::vector<int> source, target;   // endpoints (original quiver vertices)
  std::vector<int> idempotents;      // basis indices of the trivial paths

  Vec unit() const;
  const std::vector<std::pair<int, FieldElem>>& prod_row(int u, int v) const {
    return products[(std::size_t)u * dim + v];
  }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul_basis_vec(int u, const Vec& y) const;  // b_u * y
  Vec mul_vec_basis(const Vec& x, int v) const;  // x * b_v

  // span of all products of m radical elements (exact, not the length filter)
  Subspace radical_power(int m) const;
  Subspace radical() const;  // span of basis elements of length >= 1

  // least m with radical_power(m) = 0; verifies nilpotency
  int loewy_length() const;

  // span of additive commutators xy - yx
  Subspace commutator_subspace() const;

  Subspace center() const;
};

struct QuiverClass {
  bool has_loops;
  int max_parallel;
  bool is_simple_digraph;
};

// Ambient truncated path space: all paths of length < N, canonically ordered
// (shortest first, name-lexicographic within a length).
struct PathSpace {
  struct Path {
    int source, target, len;
    std::vector<int> arrows;
  };
  std::vector<Path> paths;
  int truncation = 2;

  int count() const { return (int)paths.size(); }
  // index of a composable arrow word (empty word: trivial path at `vertex`);
  // -1 when the word has length >= N
  int find(const std::vector<int>& arrows, int vertex = -1) const;

 private:
  friend class FdAlgebra;
  std::map<std::vector<int>, int> by_word_;
  std::vector<int> trivial_;  // per vertex
};

// The finite-dimensional split basic algebra kQ / (<relations> + R^N).
class FdAlgebra {
 public:
  static FdAlgebra build(const BoundQuiverPresentation& pres);

  const BoundQuiverPresentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const Field& field() const { return sc_.field; }
  const ScAlgebra& sc() const { return sc_; }
  const PathSpace& path_space() const { return pspace_; }
  const Subspace& ideal() const { return ideal_; }

  int dim() const { return sc_.dim; }
  int simple_count() const { return pres_.quiver.vertex_count; }     // l(A)
  int arrow_count() const { return (int)pres_.quiver.arrows.size(); }  // e(A)
  int loewy_length() const { return loewy_; }

  // the basis is a set of paths: non-pivot paths of the ideal span
  const std::vector<int>& basis_paths() const { return basis_paths_; }
  int basis_index_of_path(int path_index) const { return path_to_basis_[path_index]; }
  int basis_index_of_arrow(int arrow_index) const;
  int basis_index_of_vertex(int v) const { return path_to_basis_[trivial_path_[v]]; }

  // normal form of a raw path-space vector, in basis coordinates
  Vec normal_form(const Vec& path_vec) const;
  const Vec& normal_form_of_path(int path_index) const { return nf_of_path_[path_index]; }

  // J^m as a coordinate subspace (basis paths of length >= m)
  Subspace radical_power_span(int m) const;

  std::string basis_label(int basis_index) const;

  // entry (j,i) = dim e_i (J/J^2) e_j = dim Ext^1(S_i, S_j); cross-checked
  // against arrow counts
  std::vector<std::vector<int>> ext1_matrix() const;
  QuiverClass quiver_class() const;

  bool connected() const;  // weak connectivity of the underlying graph

 private:
  BoundQuiverPresentation pres_;
  PathSpace pspace_;
  Subspace ideal_{0, Field::rationals()};
  std::vector<int> basis_paths_;
  std::vector<int> path_to_basis_;
  std::vector<int> trivial_path_;  // path index of e_v
  std::vector<Vec> nf_of_path_;
  ScAlgebra sc_;
  int loewy_ = 1;
};

struct TruncatedAlgebra {
  FdAlgebra algebra;   // A / J^m
  Matrix quotient_map;  // dim(A/J^m) x dim(A)
};

// quotient A -> A/J^m; identity when m >= loewy length
TruncatedAlgebra truncate_algebra(const FdAlgebra& a, int m);

struct CornerAlgebra {
  ScAlgebra sc;
  std::vector<int> vertex_subset;
  std::vector<int> index_map;  // corner basis index -> ambient basis index
  Vec identity_in_ambient;     // sum of the chosen idempotents, ambient coords
};

// eAe for e the sum of the chosen vertex idempotents (from an FdAlgebra basis)
CornerAlgebra corner_algebra(const FdAlgebra& a, const std::vector<int>& vertices);
// same construction one level down, for nested corners
CornerAlgebra corner_of_sc(const ScAlgebra& sc, const std::vector<int>& vertices);

enum class Ternary { Yes, No, Inconclusive };

struct SymmetricForm {
  Ternary verdict;
  Vec functional;      // lambda in dual coordinates, when verdict == Yes
  std::string method;  // which stage of the search decided
};

// Search for a nondegenerate symmetric associative form. Certified yes
// (exhibited form) and certified no (determinant vanishes identically on a
// large-enough grid); inconclusive when the grid is infeasible and random
// trials miss.
SymmetricForm is_symmetric(const ScAlgebra& a, std::uint64_t seed);

}  // namespace hh1
