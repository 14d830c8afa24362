#include "hh1/derivations.hpp"

#include <algorithm>

#include "hh1/errors.hpp"

namespace hh1 {

// ---------------------------------------------------------------- basics

DerivationMatrix make_derivation(const ScAlgebra& a, Matrix m) {
  if (auto bad = kernels::leibniz_defect(a.products, m))
    throw NotADerivation("Leibniz fails on basis pair (" + std::to_string((*bad)[0]) + "," +
                         std::to_string((*bad)[1]) + ")");
  bool norm = true;
  for (int i : a.idempotents)
    for (int r = 0; r < a.dim && norm; ++r) norm = m.at((std::size_t)r, (std::size_t)i).is_zero();
  return {std::move(m), norm};
}

Matrix inner_derivation_matrix(const ScAlgebra& a, const Vec& c) {
  Matrix m((std::size_t)a.dim, (std::size_t)a.dim, a.field);
  for (int v = 0; v < a.dim; ++v) {
    Vec col = vec_sub(a.mul_vec_basis(c, v), a.mul_basis_vec(v, c));
    for (int r = 0; r < a.dim; ++r) m.at((std::size_t)r, (std::size_t)v) = col[(std::size_t)r];
  }
  return m;
}

DerivationMatrix normalize_derivation(const ScAlgebra& a, const Matrix& f) {
  if (auto bad = kernels::leibniz_defect(a.products, f))
    throw NotADerivation("Leibniz fails on basis pair (" + std::to_string((*bad)[0]) + "," +
                         std::to_string((*bad)[1]) + ")");
  // c = sum_j F(e_j) e_j kills every vertex idempotent at once
  Vec c = zero_vec((std::size_t)a.dim, a.field);
  for (int i : a.idempotents) {
    Vec fe = f.col((std::size_t)i);
    Vec fee = a.mul_vec_basis(fe, i);
    c = vec_add(c, fee);
  }
  Matrix out = f - inner_derivation_matrix(a, c);
  for (int i : a.idempotents)
    for (int r = 0; r < a.dim; ++r)
      if (!out.at((std::size_t)r, (std::size_t)i).is_zero())
        throw Error("internal: normalization failed to kill an idempotent");
  return {std::move(out), true};
}

Matrix normalize_at_idempotent(const ScAlgebra& a, const Matrix& f, const Vec& e) {
  Vec fe = f.apply(e);
  Vec c = vec_sub(a.mul(fe, e), a.mul(e, fe));  // [f(e), e]
  return f - inner_derivation_matrix(a, c);
}

// ---------------------------------------------------------------- Der_E

namespace {

// Leibniz extension of a path word under f(arrow) = single slot path, as a raw
// path-space vector; words of length >= N vanish
Vec leibniz_word_image(const FdAlgebra& A, const std::vector<int>& word, int arrow,
                       const std::vector<int>& slot_path) {
  const auto& ps = A.path_space();
  const Field& F = A.field();
  Vec out = zero_vec((std::size_t)ps.count(), F);
  const int N = ps.truncation;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (word[pos] != arrow) continue;
    if ((int)(word.size() - 1 + slot_path.size()) >= N) continue;
    std::vector<int> w;
    w.reserve(word.size() - 1 + slot_path.size());
    w.insert(w.end(), word.begin(), word.begin() + (std::ptrdiff_t)pos);
    w.insert(w.end(), slot_path.begin(), slot_path.end());
    w.insert(w.end(), word.begin() + (std::ptrdiff_t)pos + 1, word.end());
    int vertex = -1;
    if (w.empty()) {
      // single loop arrow replaced by a trivial path
      vertex = A.quiver().arrows[(std::size_t)arrow].source;
    }
    int idx = ps.find(w, vertex);
    if (idx < 0) throw Error("internal: Leibniz image word missing from path space");
    out[(std::size_t)idx] += F.one();
  }
  return out;
}

}  // namespace

DerivationSpace derivations_E_shared(std::shared_ptr<const FdAlgebra> ap) {
  DerivationSpace D;
  D.alg_ = std::move(ap);
  const FdAlgebra& A = *D.alg_;
  const ScAlgebra& sc = A.sc();
  const Quiver& Q = A.quiver();
  const Field& F = A.field();
  const int N = A.path_space().truncation;

  D.slots_.resize(Q.arrows.size());
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    D.offset_.push_back(D.flat_.size());
    for (int b = 0; b < sc.dim; ++b)
      if (sc.source[(std::size_t)b] == Q.arrows[a].source &&
          sc.target[(std::size_t)b] == Q.arrows[a].target) {
        D.slots_[a].push_back(b);
        D.flat_.emplace_back((int)a, b);
      }
  }
  const std::size_t U = D.flat_.size();

  // constraint generators: the user relations (endpoint-homogeneous components)
  // and every path of exact length N
  struct Generator {
    std::vector<std::pair<FieldElem, std::vector<int>>> terms;
  };
  std::vector<Generator> gens;
  {
    std::map<std::pair<int, int>, Generator> comp;
    for (const auto& rel : A.presentation().relations) {
      comp.clear();
      for (const auto& t : rel.terms) {
        int s = Q.arrows[(std::size_t)t.arrows.front()].source;
        int e = Q.arrows[(std::size_t)t.arrows.back()].target;
        comp[{s, e}].terms.emplace_back(t.coeff, t.arrows);
      }
      for (auto& [k, g] : comp) gens.push_back(std::move(g));
    }
    for (const auto& p : A.path_space().paths) {
      if (p.len != N - 1) continue;
      for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
        if (p.target != Q.arrows[a].source) continue;
        Generator g;
        std::vector<int> w = p.arrows;
        w.push_back((int)a);
        g.terms.emplace_back(F.one(), std::move(w));
        gens.push_back(std::move(g));
      }
    }
  }

  // rows: for each generator, residual of the Leibniz extension mod the ideal
  std::vector<Vec> rows;
  const int P = A.path_space().count();
  for (const auto& g : gens) {
    std::vector<Vec> per_unknown((std::size_t)U);
    for (std::size_t k = 0; k < U; ++k) {
      auto [arrow, slot_basis] = D.flat_[k];
      const auto& slot_path =
          A.path_space().paths[(std::size_t)A.basis_paths()[(std::size_t)slot_basis]];
      Vec img = zero_vec((std::size_t)P, F);
      for (const auto& [coeff, word] : g.terms) {
        Vec one_term = leibniz_word_image(A, word, arrow, slot_path.arrows);
        vec_axpy(img, coeff, one_term);
      }
      per_unknown[k] = A.ideal().reduce(img);
    }
    for (int coord = 0; coord < P; ++coord) {
      Vec row(U, F.zero());
      bool nonzero = false;
      for (std::size_t k = 0; k < U; ++k) {
        row[k] = per_unknown[k][(std::size_t)coord];
        nonzero = nonzero || !row[k].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  Matrix m = Matrix::from_rows(rows, U, F);
  D.space_ = kernel(m);
  return D;
}

DerivationMatrix DerivationSpace::materialize(const Vec& arrow_coords) const {
  const FdAlgebra& A = *alg_;
  const ScAlgebra& sc = A.sc();
  const Field& F = A.field();
  Matrix m((std::size_t)sc.dim, (std::size_t)sc.dim, F);
  for (int u = 0; u < sc.dim; ++u) {
    const auto& path = A.path_space().paths[(std::size_t)A.basis_paths()[(std::size_t)u]];
    if (path.len == 0) continue;
    Vec col = zero_vec((std::size_t)A.path_space().count(), F);
    for (std::size_t k = 0; k < flat_.size(); ++k) {
      if (arrow_coords[k].is_zero()) continue;
      auto [arrow, slot_basis] = flat_[k];
      const auto& slot_path =
          A.path_space().paths[(std::size_t)A.basis_paths()[(std::size_t)slot_basis]];
      Vec img = leibniz_word_image(A, path.arrows, arrow, slot_path.arrows);
      vec_axpy(col, arrow_coords[k], img);
    }
    Vec nf = A.normal_form(col);
    for (int r = 0; r < sc.dim; ++r) m.at((std::size_t)r, (std::size_t)u) = nf[(std::size_t)r];
  }
  auto d = make_derivation(sc, std::move(m));
  if (!d.e_normalized) throw Error("internal: materialized derivation is not E-normalized");
  return d;
}

Vec DerivationSpace::arrow_coords(const Matrix& f) const {
  const FdAlgebra& A = *alg_;
  const ScAlgebra& sc = A.sc();
  Vec t(flat_.size(), A.field().zero());
  std::vector<bool> in_slot((std::size_t)sc.dim);
  for (std::size_t a = 0; a < slots_.size(); ++a) {
    int col = A.basis_index_of_arrow((int)a);
    std::fill(in_slot.begin(), in_slot.end(), false);
    for (int b : slots_[a]) in_slot[(std::size_t)b] = true;
    for (int r = 0; r < sc.dim; ++r) {
      const FieldElem& x = f.at((std::size_t)r, (std::size_t)col);
      if (x.is_zero()) continue;
      if (!in_slot[(std::size_t)r])
        throw Error("derivation image of an arrow leaves its parallel corner");
    }
    for (std::size_t k = 0; k < slots_[a].size(); ++k)
      t[offset_[a] + k] = f.at((std::size_t)slots_[a][k], (std::size_t)col);
  }
  return t;
}

std::vector<std::size_t> DerivationSpace::positions_below_length(int m) const {
  const ScAlgebra& sc = alg_->sc();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < flat_.size(); ++k)
    if (sc.length[(std::size_t)flat_[k].second] < m) out.push_back(k);
  return out;
}

Subspace inner_derivations_E(const DerivationSpace& der) {
  const FdAlgebra& A = der.algebra();
  const ScAlgebra& sc = A.sc();
  const Field& F = A.field();
  Subspace out(der.unknowns(), F);
  std::size_t centraliser_dim = 0;
  for (int c = 0; c < sc.dim; ++c) {
    if (sc.source[(std::size_t)c] != sc.target[(std::size_t)c]) continue;
    ++centraliser_dim;
    Vec t(der.unknowns(), F.zero());
    std::size_t off = 0;
    for (std::size_t a = 0; a < der.slots().size(); ++a) {
      int ab = A.basis_index_of_arrow((int)a);
      Vec br = zero_vec((std::size_t)sc.dim, F);
      for (const auto& [w, co] : sc.prod_row(c, ab)) br[(std::size_t)w] += co;
      for (const auto& [w, co] : sc.prod_row(ab, c)) br[(std::size_t)w] -= co;
      for (std::size_t k = 0; k < der.slots()[a].size(); ++k) {
        t[off + k] = br[(std::size_t)der.slots()[a][k]];
        br[(std::size_t)der.slots()[a][k]] = F.zero();
      }
      if (!vec_is_zero(br)) throw Error("inner derivation leaves the parallel corners");
      off += der.slots()[a].size();
    }
    if (!der.space().contains(t))
      throw Error("internal: inner derivation not in the solved derivation space");
    out.insert(t);
  }
  std::size_t zdim = sc.center().dim();
  if (out.dim() != centraliser_dim - zdim)
    throw Error("inner derivation count disagrees with dim C_A(E) - dim Z(A)");
  return out;
}

Subspace d_filtration(const DerivationSpace& der, int m) {
  if (m < 1) throw Error("filtration degree must be >= 1");
  const Field& F = der.algebra().field();
  auto positions = der.positions_below_length(m);
  const auto& basis = der.space().basis();
  const std::size_t r = basis.size();
  Matrix cond(positions.size(), r, F);
  for (std::size_t s = 0; s < positions.size(); ++s)
    for (std::size_t i = 0; i < r; ++i) cond.at(s, i) = basis[i][positions[s]];
  Subspace alpha = kernel(cond);
  Subspace out(der.unknowns(), F);
  for (const auto& a : alpha.basis()) {
    Vec v(der.unknowns(), F.zero());
    for (std::size_t i = 0; i < r; ++i) vec_axpy(v, a[i], basis[i]);
    out.insert(v);
  }
  return out;
}

// ---------------------------------------------------------------- HH1

HH1Algebra hh1_shared(std::shared_ptr<const FdAlgebra> ap) {
  HH1Algebra h;
  h.der_ = derivations_E_shared(std::move(ap));
  const FdAlgebra& A = h.der_.algebra();
  h.inner_ = inner_derivations_E(h.der_);
  h.proj_ = quotient_basis(h.der_.space(), h.inner_);
  for (const auto& coords : h.proj_.complement()) h.reps_.push_back(h.der_.materialize(coords));

  const int d = (int)h.reps_.size();
  kernels::BracketTable table((std::size_t)d, std::vector<Vec>((std::size_t)d));
  for (int i = 0; i < d; ++i) table[(std::size_t)i][(std::size_t)i] = zero_vec((std::size_t)d, A.field());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix br = kernels::commutator(h.reps_[(std::size_t)i].m, h.reps_[(std::size_t)j].m);
      Vec t = h.der_.arrow_coords(br);
      Vec cls = h.proj_.coords(t);
      table[(std::size_t)i][(std::size_t)j] = cls;
      table[(std::size_t)j][(std::size_t)i] = vec_scaled(cls, A.field().from_int(-1));
    }
  std::string name = A.presentation().name.empty() ? "algebra" : A.presentation().name;
  h.lie_ = LieSC::from_table(A.field(), std::move(table), "HH1(" + name + ")");
  return h;
}

Vec HH1Algebra::class_of_coords(const Vec& arrow_coords) const { return proj_.coords(arrow_coords); }

Vec HH1Algebra::class_of_matrix(const Matrix& f) const {
  DerivationMatrix nd = normalize_derivation(algebra().sc(), f);
  Vec t = der_.arrow_coords(nd.m);
  return proj_.coords(t);
}

// ---------------------------------------------------------------- generic

GenericHH1 hh1_generic(const ScAlgebra& a) {
  GenericHH1 g;
  g.alg_ = a;
  const Field& F = a.field;
  const int d = a.dim;
  const std::size_t d2 = (std::size_t)d * d;
  auto flat = [&](int r, int c) { return (std::size_t)r * d + c; };

  Subspace cons(d2, F);
  std::vector<Vec> block;
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      block.assign((std::size_t)d, zero_vec(d2, F));
      for (const auto& [z, c] : a.prod_row(u, v))
        for (int w = 0; w < d; ++w) block[(std::size_t)w][flat(w, z)] += c;
      for (int r = 0; r < d; ++r) {
        for (const auto& [w, c] : a.prod_row(r, v)) block[(std::size_t)w][flat(r, u)] -= c;
        for (const auto& [w, c] : a.prod_row(u, r)) block[(std::size_t)w][flat(r, v)] -= c;
      }
      for (auto& row : block)
        if (!vec_is_zero(row)) cons.insert(row);
    }
  Matrix cm = Matrix::from_rows(cons.basis(), d2, F);
  g.der_ = kernel(cm);

  g.ider_ = Subspace(d2, F);
  for (int u = 0; u < d; ++u) {
    Vec c = zero_vec((std::size_t)d, F);
    c[(std::size_t)u] = F.one();
    Matrix inner = inner_derivation_matrix(a, c);
    Vec fl(d2, F.zero());
    for (int r = 0; r < d; ++r)
      for (int col = 0; col < d; ++col) fl[flat(r, col)] = inner.at((std::size_t)r, (std::size_t)col);
    if (!vec_is_zero(fl)) {
      if (!g.der_.contains(fl)) throw Error("internal: inner derivation fails the Leibniz system");
      g.ider_.insert(fl);
    }
  }
  g.proj_ = quotient_basis(g.der_, g.ider_);
  for (const auto& coords : g.proj_.complement()) {
    Matrix m((std::size_t)d, (std::size_t)d, F);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at((std::size_t)r, (std::size_t)c) = coords[flat(r, c)];
    g.reps_.push_back(std::move(m));
  }
  const int hd = (int)g.reps_.size();
  kernels::BracketTable table((std::size_t)hd, std::vector<Vec>((std::size_t)hd));
  for (int i = 0; i < hd; ++i) table[(std::size_t)i][(std::size_t)i] = zero_vec((std::size_t)hd, F);
  for (int i = 0; i < hd; ++i)
    for (int j = i + 1; j < hd; ++j) {
      Matrix br = kernels::commutator(g.reps_[(std::size_t)i], g.reps_[(std::size_t)j]);
      Vec fl(d2, F.zero());
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) fl[flat(r, c)] = br.at((std::size_t)r, (std::size_t)c);
      Vec cls = g.proj_.coords(fl);
      table[(std::size_t)i][(std::size_t)j] = cls;
      table[(std::size_t)j][(std::size_t)i] = vec_scaled(cls, F.from_int(-1));
    }
  g.lie_ = LieSC::from_table(F, std::move(table), "HH1-generic");
  g.solvable_ = series_report(g.lie_).solvable;
  return g;
}

Vec GenericHH1::class_of(const Matrix& f) const {
  const int d = alg_.dim;
  Vec fl((std::size_t)d * d, alg_.field.zero());
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) fl[(std::size_t)r * d + c] = f.at((std::size_t)r, (std::size_t)c);
  if (!der_.contains(fl)) throw NotADerivation("matrix fails the generic Leibniz system");
  return proj_.coords(fl);
}

// ---------------------------------------------------------------- maps

Subspace hh1_filtration_image(const HH1Algebra& h, int m) {
  Subspace dm = d_filtration(h.derivation_space(), m);
  Subspace out((std::size_t)h.dim(), h.algebra().field());
  for (const auto& row : dm.basis()) {
    Vec cls = h.class_of_coords(row);
    if (!vec_is_zero(cls)) out.insert(cls);
  }
  return out;
}

TruncationMap truncation_map(const FdAlgebra& a, const HH1Algebra& h) {
  if (a.quiver_class().has_loops) throw HasLoops();
  TruncationMap out{truncate_algebra(a, 2), HH1Algebra(), Matrix(), Subspace(0, a.field())};
  out.target = hh1_of(out.truncated.algebra);
  const Matrix& q = out.truncated.quotient_map;
  Matrix lift = q.transposed();  // 0/1 entries: path labels shared
  Matrix phi((std::size_t)out.target.dim(), (std::size_t)h.dim(), a.field());
  for (int i = 0; i < h.dim(); ++i) {
    Matrix g = kernels::mat_mul(kernels::mat_mul(q, h.representatives()[(std::size_t)i].m), lift);
    Vec cls = out.target.class_of_matrix(g);
    for (int r = 0; r < out.target.dim(); ++r) phi.at((std::size_t)r, (std::size_t)i) = cls[(std::size_t)r];
  }
  out.phi = phi;
  out.phi_kernel = kernel(phi);

  // D_2 maps onto ker(phi), and the kernel is a nilpotent Lie ideal
  if (!(out.phi_kernel == hh1_filtration_image(h, 2)))
    throw Error("kernel of the truncation map differs from the image of D_2");
  const Subspace full = Subspace::full((std::size_t)h.dim(), a.field());
  if (!out.phi_kernel.contains(subalgebra_bracket(h.lie(), full, out.phi_kernel)))
    throw Error("kernel of the truncation map is not an ideal");
  if (out.phi_kernel.dim() > 0 &&
      !series_report(lie_subalgebra(h.lie(), out.phi_kernel)).nilpotent)
    throw Error("kernel of the truncation map is not nilpotent");
  return out;
}

namespace {

void verify_lie_homomorphism(const Matrix& map, const LieSC& src, const LieSC& dst,
                             const char* what) {
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) {
      Vec lhs = map.apply(src.bracket_basis(i, j));
      Vec rhs = dst.bracket(map.col((std::size_t)i), map.col((std::size_t)j));
      if (!(lhs == rhs))
        throw Error(std::string(what) + " is not a Lie homomorphism at basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

}  // namespace

namespace {

Matrix restrict_to_corner(const Matrix& f, const CornerAlgebra& corner) {
  const int cd = corner.sc.dim;
  std::vector<bool> in_corner(f.rows(), false);
  for (int b : corner.index_map) in_corner[(std::size_t)b] = true;
  Matrix r((std::size_t)cd, (std::size_t)cd, corner.sc.field);
  for (int v = 0; v < cd; ++v) {
    std::size_t col = (std::size_t)corner.index_map[(std::size_t)v];
    for (std::size_t row = 0; row < f.rows(); ++row)
      if (!f.at(row, col).is_zero() && !in_corner[row])
        throw Error("corner restriction leaves the corner");
    for (int u = 0; u < cd; ++u)
      r.at((std::size_t)u, (std::size_t)v) = f.at((std::size_t)corner.index_map[(std::size_t)u], col);
  }
  return r;
}

}  // namespace

SchurMap schur_map(const FdAlgebra& a, const HH1Algebra& h, const std::vector<int>& vertices) {
  SchurMap s{corner_algebra(a, vertices), GenericHH1(), Matrix()};
  s.corner_hh1 = hh1_generic(s.corner.sc);
  Matrix map((std::size_t)s.corner_hh1.dim(), (std::size_t)h.dim(), a.field());
  for (int i = 0; i < h.dim(); ++i) {
    Matrix r = restrict_to_corner(h.representatives()[(std::size_t)i].m, s.corner);
    Vec cls = s.corner_hh1.class_of(r);
    for (int row = 0; row < s.corner_hh1.dim(); ++row)
      map.at((std::size_t)row, (std::size_t)i) = cls[(std::size_t)row];
  }
  s.map = std::move(map);
  verify_lie_homomorphism(s.map, h.lie(), s.corner_hh1.lie(), "Schur corner map");
  return s;
}

SchurMap schur_map_generic(const GenericHH1& g, const std::vector<int>& vertices) {
  SchurMap s{corner_of_sc(g.algebra(), vertices), GenericHH1(), Matrix()};
  s.corner_hh1 = hh1_generic(s.corner.sc);
  Matrix map((std::size_t)s.corner_hh1.dim(), (std::size_t)g.dim(), g.algebra().field);
  for (int i = 0; i < g.dim(); ++i) {
    Matrix norm =
        normalize_at_idempotent(g.algebra(), g.representatives()[(std::size_t)i], s.corner.identity_in_ambient);
    Matrix r = restrict_to_corner(norm, s.corner);
    Vec cls = s.corner_hh1.class_of(r);
    for (int row = 0; row < s.corner_hh1.dim(); ++row)
      map.at((std::size_t)row, (std::size_t)i) = cls[(std::size_t)row];
  }
  s.map = std::move(map);
  verify_lie_homomorphism(s.map, g.lie(), s.corner_hh1.lie(), "Schur corner map");
  return s;
}

Vec p_power_of_matrix(const HH1Algebra& h, const Matrix& f) {
  const std::uint64_t p = h.algebra().field().characteristic();
  if (!p) throw NotPrimeField();
  Matrix acc = Matrix::identity(f.rows(), h.algebra().field());
  for (std::uint64_t i = 0; i < p; ++i) acc = kernels::mat_mul(acc, f);
  return h.class_of_matrix(acc);
}

Vec p_power_map(const HH1Algebra& h, int class_index) {
  return p_power_of_matrix(h, h.representatives()[(std::size_t)class_index].m);
}

Subspace hh1_radical_preserving_image(const GenericHH1& g) {
  const ScAlgebra& a = g.alg_;
  const Field& F = a.field;
  const int d = a.dim;
  // conditions: entries F[w][z] with length(w) = 0, length(z) >= 1 vanish
  std::vector<std::size_t> positions;
  for (int w = 0; w < d; ++w)
    for (int z = 0; z < d; ++z)
      if (a.length[(std::size_t)w] == 0 && a.length[(std::size_t)z] >= 1)
        positions.push_back((std::size_t)w * d + z);
  const auto& basis = g.der_.basis();
  Matrix cond(positions.size(), basis.size(), F);
  for (std::size_t s = 0; s < positions.size(); ++s)
    for (std::size_t i = 0; i < basis.size(); ++i) cond.at(s, i) = basis[i][positions[s]];
  Subspace alpha = kernel(cond);
  Subspace out((std::size_t)g.dim(), F);
  for (const auto& al : alpha.basis()) {
    Vec v((std::size_t)d * d, F.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) vec_axpy(v, al[i], basis[i]);
    Vec cls = g.proj_.coords(v);
    if (!vec_is_zero(cls)) out.insert(cls);
  }
  return out;
}

}  // namespace hh1
