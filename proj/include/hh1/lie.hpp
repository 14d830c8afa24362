#pragma once

#include <string>
#include <vector>

#include "hh1/linalg.hpp"
#include "hh1/rng.hpp"

namespace hh1 {

// Lie algebra given by structure constants; antisymmetry, alternation and the
// Jacobi identity are checked exhaustively at construction.
class LieSC {
 public:
  static LieSC from_table(const Field& f, kernels::BracketTable table, std::string provenance);

  int dim() const { return dim_; }
  const Field& field() const { return f_; }
  const std::string& provenance() const { return prov_; }
  const kernels::BracketTable& table() const { return g_; }

  const Vec& bracket_basis(int i, int j) const { return g_[(std::size_t)i][(std::size_t)j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad_basis(int i) const;
  Matrix ad(const Vec& x) const;

 private:
  Field f_ = Field::rationals();
  int dim_ = 0;
  kernels::BracketTable g_;
  std::string prov_;
};

// span of [u, v] over basis pairs of U and V
Subspace subalgebra_bracket(const LieSC& l, const Subspace& u, const Subspace& v);

struct SeriesReport {
  std::vector<Subspace> derived_series;         // L^(1), L^(2), ... until stable
  std::vector<Subspace> lower_central;          // L^1 = L', L^{m+1} = [L, L^m]
  std::vector<Subspace> derived_lower_central;  // the series computed inside L'
  std::vector<std::size_t> derived_dims;        // dims of the above, for reports
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_lc_dims;
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  bool derived_nilpotent = false;
  // smallest positive n with L^(n) = 0 (abelian nonzero has derived length 1);
  // 0 for the zero algebra, -1 when not solvable
  int derived_length = 0;
  // smallest positive m with (L')^m = 0, indexed from (L')^1 = [L',L'];
  // 0 when L' = 0, -1 when L' is not nilpotent
  int nilpotency_class_of_derived = 0;
};

SeriesReport series_report(const LieSC& l);

// kappa(x_i, x_j) = trace(ad x_i ad x_j)
Matrix killing_form(const LieSC& l);

// {x : kappa(x, [L,L]) = 0}; the solvable radical in characteristic 0
Subspace radical_char0(const LieSC& l);  // throws UnsupportedCharacteristic over F_p

// smallest ideal containing v
Subspace ideal_generated_by(const LieSC& l, const Vec& v);

struct SimpleProbe {
  bool certified_no = false;     // a proper structure was exhibited
  bool probably_simple = false;  // Monte Carlo: no probe found an ideal
  Subspace witness{0, Field::rationals()};  // proper ideal / proper derived subalgebra
  std::string reason;
};

// one-sided: "no" is certified by the witness, "probably yes" is Monte Carlo
SimpleProbe is_simple_probe(const LieSC& l, std::uint64_t seed, int trials = 64);

enum class Recognition { Yes, No, Inconclusive };

struct Sl2Result {
  Recognition verdict = Recognition::Inconclusive;
  Vec e, h, f;  // basis with [e,f]=h, [h,e]=2e, [h,f]=-2f, when Yes
  std::string detail;
};

// certified yes (exhibited Chevalley basis) / certified no (dim != 3, char 2,
// or not perfect) / inconclusive (eigenvalues may live outside the field)
Sl2Result recognize_sl2(const LieSC& l, std::uint64_t seed);

struct WittResult {
  Recognition verdict = Recognition::Inconclusive;
  std::vector<Vec> graded_basis;  // g_{-1}, ..., g_{p-2}, when Yes
  std::string detail;
};

// certified yes: exhibited graded basis with [g_i, g_j] = (j-i) g_{i+j}
// (terms outside -1..p-2 are zero); requires dim = p over F_p
WittResult recognize_witt(const LieSC& l, std::uint64_t seed);  // throws WrongCharacteristic over Q

// quotient Lie algebra by an ideal (verified); complement reps chosen canonically
LieSC lie_quotient(const LieSC& l, const Subspace& ideal);

// sub-Lie-algebra on a subspace (bracket closure verified)
LieSC lie_subalgebra(const LieSC& l, const Subspace& sub);

}  // namespace hh1
