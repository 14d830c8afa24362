#include "hh1/lie.hpp"

#include <algorithm>

#include "hh1/errors.hpp"

namespace hh1 {

LieSC LieSC::from_table(const Field& f, kernels::BracketTable table, std::string provenance) {
  LieSC l;
  l.f_ = f;
  l.dim_ = (int)table.size();
  for (const auto& row : table)
    if ((int)row.size() != l.dim_) throw Error("ragged bracket table");
  for (int i = 0; i < l.dim_; ++i) {
    if (!vec_is_zero(table[(std::size_t)i][(std::size_t)i]))
      throw Error("bracket table is not alternating at (" + std::to_string(i) + ")");
    for (int j = 0; j < l.dim_; ++j) {
      if ((int)table[(std::size_t)i][(std::size_t)j].size() != l.dim_)
        throw Error("bracket table entry of wrong dimension");
      Vec s = vec_add(table[(std::size_t)i][(std::size_t)j], table[(std::size_t)j][(std::size_t)i]);
      if (!vec_is_zero(s))
        throw Error("bracket table is not antisymmetric at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }
  }
  l.g_ = std::move(table);
  l.prov_ = std::move(provenance);
  if (auto bad = kernels::jacobi_defect(l.g_, f))
    throw Error("Jacobi identity fails at (" + std::to_string((*bad)[0]) + "," +
                std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
  return l;
}

Vec LieSC::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec((std::size_t)dim_, f_);
  for (int i = 0; i < dim_; ++i) {
    if (x[(std::size_t)i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[(std::size_t)j].is_zero()) continue;
      vec_axpy(out, x[(std::size_t)i] * y[(std::size_t)j], g_[(std::size_t)i][(std::size_t)j]);
    }
  }
  return out;
}

Matrix LieSC::ad_basis(int i) const {
  Matrix m((std::size_t)dim_, (std::size_t)dim_, f_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at((std::size_t)k, (std::size_t)j) = g_[(std::size_t)i][(std::size_t)j][(std::size_t)k];
  return m;
}

Matrix LieSC::ad(const Vec& x) const {
  Matrix m((std::size_t)dim_, (std::size_t)dim_, f_);
  for (int i = 0; i < dim_; ++i) {
    if (x[(std::size_t)i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (!g_[(std::size_t)i][(std::size_t)j][(std::size_t)k].is_zero())
          m.at((std::size_t)k, (std::size_t)j) += x[(std::size_t)i] * g_[(std::size_t)i][(std::size_t)j][(std::size_t)k];
  }
  return m;
}

Subspace subalgebra_bracket(const LieSC& l, const Subspace& u, const Subspace& v) {
  Subspace out((std::size_t)l.dim(), l.field());
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      Vec b = l.bracket(x, y);
      if (!vec_is_zero(b)) out.insert(b);
    }
  return out;
}

SeriesReport series_report(const LieSC& l) {
  SeriesReport r;
  const Subspace full = Subspace::full((std::size_t)l.dim(), l.field());

  Subspace derived = subalgebra_bracket(l, full, full);
  r.abelian = derived.dim() == 0;

  // derived series
  Subspace cur = derived;
  r.derived_series.push_back(cur);
  while (cur.dim() > 0) {
    Subspace next = subalgebra_bracket(l, cur, cur);
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
    r.derived_series.push_back(cur);
  }
  for (const auto& s : r.derived_series) r.derived_dims.push_back(s.dim());
  r.solvable = r.derived_dims.empty() || r.derived_dims.back() == 0;
  if (l.dim() == 0)
    r.derived_length = 0;
  else if (!r.solvable)
    r.derived_length = -1;
  else
    r.derived_length = (int)r.derived_dims.size();

  // lower central series of L, indexed from L^1 = L'
  cur = derived;
  r.lower_central.push_back(cur);
  while (cur.dim() > 0) {
    Subspace next = subalgebra_bracket(l, full, cur);
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
    r.lower_central.push_back(cur);
  }
  for (const auto& s : r.lower_central) r.lower_central_dims.push_back(s.dim());
  r.nilpotent = r.lower_central_dims.back() == 0 || l.dim() == 0;

  // the same series computed inside the derived subalgebra
  if (derived.dim() == 0) {
    r.derived_nilpotent = true;
    r.nilpotency_class_of_derived = 0;
  } else {
    cur = subalgebra_bracket(l, derived, derived);
    r.derived_lower_central.push_back(cur);
    while (cur.dim() > 0) {
      Subspace next = subalgebra_bracket(l, derived, cur);
      if (next.dim() == cur.dim()) break;
      cur = std::move(next);
      r.derived_lower_central.push_back(cur);
    }
    for (const auto& s : r.derived_lower_central) r.derived_lc_dims.push_back(s.dim());
    r.derived_nilpotent = r.derived_lc_dims.back() == 0;
    r.nilpotency_class_of_derived = r.derived_nilpotent ? (int)r.derived_lc_dims.size() : -1;
  }
  return r;
}

Matrix killing_form(const LieSC& l) {
  std::vector<Matrix> ad;
  ad.reserve((std::size_t)l.dim());
  for (int i = 0; i < l.dim(); ++i) ad.push_back(l.ad_basis(i));
  return kernels::killing_matrix(ad, l.field());
}

Subspace radical_char0(const LieSC& l) {
  if (l.field().characteristic())
    throw UnsupportedCharacteristic("the Killing-orthogonality radical criterion needs char 0");
  Matrix kappa = killing_form(l);
  const Subspace full = Subspace::full((std::size_t)l.dim(), l.field());
  Subspace derived = subalgebra_bracket(l, full, full);
  std::vector<Vec> rows;
  for (const auto& y : derived.basis()) rows.push_back(kappa.apply(y));
  Matrix m = Matrix::from_rows(rows, (std::size_t)l.dim(), l.field());
  return kernel(m);
}

Subspace ideal_generated_by(const LieSC& l, const Vec& v) {
  Subspace s((std::size_t)l.dim(), l.field());
  if (vec_is_zero(v)) return s;
  std::vector<Vec> work = {v};
  s.insert(v);
  while (!work.empty()) {
    Vec x = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < l.dim(); ++i) {
      Vec e = zero_vec((std::size_t)l.dim(), l.field());
      e[(std::size_t)i] = l.field().one();
      Vec b = l.bracket(e, x);
      if (!vec_is_zero(b) && s.insert(b)) work.push_back(std::move(b));
    }
  }
  return s;
}

SimpleProbe is_simple_probe(const LieSC& l, std::uint64_t seed, int trials) {
  SimpleProbe p;
  const int n = l.dim();
  const Subspace full = Subspace::full((std::size_t)n, l.field());
  if (n == 0) {
    p.certified_no = true;
    p.reason = "zero algebra";
    return p;
  }
  Subspace derived = subalgebra_bracket(l, full, full);
  if (derived.dim() < (std::size_t)n) {
    p.certified_no = true;
    p.witness = derived;
    p.reason = "not perfect: [L,L] is proper";
    return p;
  }
  auto probe = [&](const Vec& v) -> bool {
    if (vec_is_zero(v)) return false;
    Subspace ideal = ideal_generated_by(l, v);
    if (ideal.dim() > 0 && ideal.dim() < (std::size_t)n) {
      p.certified_no = true;
      p.witness = ideal;
      p.reason = "proper nonzero ideal found";
      return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    Vec v = zero_vec((std::size_t)n, l.field());
    v[(std::size_t)i] = l.field().one();
    if (probe(v)) return p;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = zero_vec((std::size_t)n, l.field());
      v[(std::size_t)i] = l.field().one();
      v[(std::size_t)j] = l.field().one();
      if (probe(v)) return p;
    }
  Rng rng(seed ^ 0x73696d70ULL);
  for (int t = 0; t < trials; ++t) {
    Vec v((std::size_t)n);
    for (int i = 0; i < n; ++i) v[(std::size_t)i] = rng.field_elem(l.field(), 9);
    if (probe(v)) return p;
  }
  p.probably_simple = true;
  p.reason = "no probe found a proper ideal";
  return p;
}

namespace {

// candidate stream for the recognizers: basis vectors, pairwise sums,
// then seeded random vectors
std::vector<Vec> candidate_vectors(const LieSC& l, std::uint64_t seed, int random_trials) {
  std::vector<Vec> out;
  const int n = l.dim();
  for (int i = 0; i < n; ++i) {
    Vec v = zero_vec((std::size_t)n, l.field());
    v[(std::size_t)i] = l.field().one();
    out.push_back(std::move(v));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = zero_vec((std::size_t)n, l.field());
      v[(std::size_t)i] = l.field().one();
      v[(std::size_t)j] = l.field().one();
      out.push_back(std::move(v));
    }
  Rng rng(seed ^ 0x7265636fULL);
  for (int t = 0; t < random_trials; ++t) {
    Vec v((std::size_t)n);
    for (int i = 0; i < n; ++i) v[(std::size_t)i] = rng.field_elem(l.field(), 9);
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Sl2Result recognize_sl2(const LieSC& l, std::uint64_t seed) {
  Sl2Result r;
  if (l.dim() != 3) {
    r.verdict = Recognition::No;
    r.detail = "dimension is not 3";
    return r;
  }
  if (l.field().characteristic() == 2) {
    r.verdict = Recognition::No;
    r.detail = "characteristic 2";
    return r;
  }
  const Subspace full = Subspace::full(3, l.field());
  if (subalgebra_bracket(l, full, full).dim() != 3) {
    r.verdict = Recognition::No;
    r.detail = "not perfect";
    return r;
  }
  const FieldElem two = l.field().from_int(2);
  for (const auto& v : candidate_vectors(l, seed, 64)) {
    auto eig = eigenvalues_in_field(l.ad(v));
    if (eig.size() != 3) continue;
    // need {0, theta, -theta} with theta != 0; take the canonical sign so the
    // standard table comes back in its own basis (Q: the positive eigenvalue,
    // F_p: the smallest residue of the pair)
    const FieldElem* theta = nullptr;
    bool has_zero = false;
    for (const auto& ep : eig) has_zero = has_zero || ep.value.is_zero();
    if (!has_zero) continue;
    auto consider = [&](const Eigenpair& ep) {
      if (ep.value.is_zero()) return;
      for (const auto& eq : eig)
        if (eq.value == -ep.value) {
          if (!theta) theta = &ep.value;
          return;
        }
    };
    if (l.field().characteristic()) {
      for (const auto& ep : eig) consider(ep);  // ascending residues: smallest wins
    } else {
      for (auto it = eig.rbegin(); it != eig.rend(); ++it) consider(*it);  // largest wins
    }
    if (!theta) continue;
    Vec h = vec_scaled(v, two / *theta);
    auto heig = eigenvalues_in_field(l.ad(h));
    Vec e, f;
    bool ok = true;
    for (const auto& ep : heig) {
      if (ep.value == two && ep.space.dim() == 1) e = ep.space.basis()[0];
      if (ep.value == -two && ep.space.dim() == 1) f = ep.space.basis()[0];
    }
    if (e.empty() || f.empty()) continue;
    // [e,f] must span the zero eigenspace direction h up to a nonzero scalar
    Vec w = l.bracket(e, f);
    Subspace hline = Subspace::from_rows(3, l.field(), {h});
    if (vec_is_zero(w) || !hline.contains(w)) continue;
    FieldElem delta = l.field().zero();
    for (int i = 0; i < 3; ++i)
      if (!h[(std::size_t)i].is_zero()) {
        delta = w[(std::size_t)i] / h[(std::size_t)i];
        break;
      }
    if (delta.is_zero()) continue;
    e = vec_scaled(e, delta.inverse());
    // verify the three relations exactly and the basis property
    ok = l.bracket(e, f) == h && l.bracket(h, e) == vec_scaled(e, two) &&
         l.bracket(h, f) == vec_scaled(vec_scaled(f, two), l.field().from_int(-1));
    if (!ok) continue;
    Subspace span = Subspace::from_rows(3, l.field(), {e, h, f});
    if (span.dim() != 3) continue;
    r.verdict = Recognition::Yes;
    r.e = e;
    r.h = h;
    r.f = f;
    r.detail = "Chevalley basis verified";
    return r;
  }
  r.verdict = Recognition::Inconclusive;
  r.detail = "no split toral candidate found";
  return r;
}

WittResult recognize_witt(const LieSC& l, std::uint64_t seed) {
  WittResult r;
  if (!l.field().characteristic())
    throw WrongCharacteristic("the Witt recognizer needs a prime field");
  const std::uint64_t p = l.field().characteristic();
  if ((std::uint64_t)l.dim() != p || p < 3) {
    r.verdict = Recognition::No;
    r.detail = "dimension differs from the characteristic";
    return r;
  }
  const int n = l.dim();
  const Subspace full = Subspace::full((std::size_t)n, l.field());
  if (subalgebra_bracket(l, full, full).dim() != (std::size_t)n) {
    r.verdict = Recognition::No;
    r.detail = "not perfect";
    return r;
  }

  auto try_toral = [&](const Vec& h) -> bool {
    auto eig = eigenvalues_in_field(l.ad(h));
    if (eig.size() != p) return false;
    // one eigenvector per residue; degree i sits at eigenvalue i mod p
    std::vector<Vec> by_residue((std::size_t)p);
    for (const auto& ep : eig) {
      if (ep.space.dim() != 1) return false;
      by_residue[(std::size_t)ep.value.residue()] = ep.space.basis()[0];
    }
    // anchor degree -1 at residue p-1, top degree p-2 at residue p-2
    std::vector<Vec> g((std::size_t)p);  // g[t+1] holds degree t, t = -1..p-2
    Vec gm1 = by_residue[(std::size_t)(p - 1)];
    g[(std::size_t)(p - 1)] = by_residue[(std::size_t)(p - 2)];
    for (int t = (int)p - 2; t >= 1; --t) {
      Vec next = l.bracket(gm1, g[(std::size_t)(t + 1)]);
      FieldElem inv = l.field().from_int(t + 1).inverse();
      next = vec_scaled(next, inv);
      if (vec_is_zero(next)) return false;
      g[(std::size_t)t] = std::move(next);
    }
    // residual scaling: [g_-1, g_0] must equal g_-1
    Vec w = l.bracket(gm1, g[1]);
    Subspace line = Subspace::from_rows((std::size_t)n, l.field(), {gm1});
    if (vec_is_zero(w) || !line.contains(w)) return false;
    FieldElem mu = l.field().zero();
    for (int i = 0; i < n; ++i)
      if (!gm1[(std::size_t)i].is_zero()) {
        mu = w[(std::size_t)i] / gm1[(std::size_t)i];
        break;
      }
    if (mu.is_zero()) return false;
    // g_-1 := mu * g_-1 rescales degree t by mu^{p-2-t}
    g[0] = vec_scaled(gm1, mu);
    FieldElem acc = l.field().one();
    for (int t = (int)p - 3; t >= 0; --t) {
      acc = acc * mu;
      g[(std::size_t)(t + 1)] = vec_scaled(g[(std::size_t)(t + 1)], acc);
    }
    // certify: full table [g_i, g_j] = (j - i) g_{i+j}, zero outside -1..p-2
    for (int i = -1; i <= (int)p - 2; ++i)
      for (int j = i + 1; j <= (int)p - 2; ++j) {
        Vec lhs = l.bracket(g[(std::size_t)(i + 1)], g[(std::size_t)(j + 1)]);
        Vec rhs = zero_vec((std::size_t)n, l.field());
        if (i + j >= -1 && i + j <= (int)p - 2)
          rhs = vec_scaled(g[(std::size_t)(i + j + 1)], l.field().from_int(j - i));
        if (!(lhs == rhs)) return false;
      }
    std::vector<Vec> rows(g.begin(), g.end());
    if (Subspace::from_rows((std::size_t)n, l.field(), rows).dim() != (std::size_t)n) return false;
    r.graded_basis = std::move(g);
    return true;
  };

  for (const auto& v : candidate_vectors(l, seed, 64)) {
    // ad(c v) has all residues as eigenvalues for any c != 0; the grading needs
    // the normalization where degree -1 sits at p-1, so try all rescalings
    for (std::uint64_t c = 1; c < p; ++c) {
      Vec h = vec_scaled(v, FieldElem::mod_p(p, c));
      if (try_toral(h)) {
        r.verdict = Recognition::Yes;
        r.detail = "graded basis verified";
        return r;
      }
    }
  }
  r.verdict = Recognition::Inconclusive;
  r.detail = "no toral candidate produced the graded basis";
  return r;
}

LieSC lie_quotient(const LieSC& l, const Subspace& ideal) {
  const Subspace full = Subspace::full((std::size_t)l.dim(), l.field());
  // ideal check: [L, ideal] inside ideal
  if (!ideal.contains(subalgebra_bracket(l, full, ideal)))
    throw Error("subspace is not a Lie ideal");
  QuotientDecomposition qd = quotient_basis(full, ideal);
  const int m = (int)qd.dim();
  kernels::BracketTable table((std::size_t)m, std::vector<Vec>((std::size_t)m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[(std::size_t)i][(std::size_t)j] =
          qd.coords(l.bracket(qd.complement()[(std::size_t)i], qd.complement()[(std::size_t)j]));
  return LieSC::from_table(l.field(), std::move(table), l.provenance() + "/ideal");
}

LieSC lie_subalgebra(const LieSC& l, const Subspace& sub) {
  Subspace closure = subalgebra_bracket(l, sub, sub);
  if (!sub.contains(closure)) throw Error("subspace is not closed under the bracket");
  Subspace zero((std::size_t)l.dim(), l.field());
  QuotientDecomposition qd = quotient_basis(sub, zero);
  const int m = (int)qd.dim();
  kernels::BracketTable table((std::size_t)m, std::vector<Vec>((std::size_t)m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[(std::size_t)i][(std::size_t)j] =
          qd.coords(l.bracket(qd.complement()[(std::size_t)i], qd.complement()[(std::size_t)j]));
  return LieSC::from_table(l.field(), std::move(table), l.provenance() + "/sub");
}

}  // namespace hh1
