#include "hh1/linalg.hpp"

#include <algorithm>
#include <map>

#include "hh1/errors.hpp"

namespace hh1 {

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m, kernels::Exec e) {
  Matrix r(m);
  auto piv = kernels::rref_inplace(r, e);
  return {std::move(r), std::move(piv)};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::from_rows(std::size_t ambient_dim, const Field& f,
                             const std::vector<Vec>& rows) {
  Subspace s(ambient_dim, f);
  for (const auto& r : rows) s.insert(r);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& f) {
  Subspace s(ambient_dim, f);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v = zero_vec(ambient_dim, f);
    v[i] = f.one();
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElem& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    FieldElem f = c;  // pivot entries are 1
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) r[j] -= f * rows_[i][j];
  }
  return r;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!r[j].is_zero()) {
      p = j;
      break;
    }
  if (p == ambient_) return false;
  FieldElem inv = r[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j)
    if (!r[j].is_zero()) r[j] = r[j] * inv;
  // eliminate the new pivot from existing rows, keep rows sorted by pivot
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElem c = rows_[i][p];
    if (c.is_zero()) continue;
    for (std::size_t j = p; j < ambient_; ++j)
      if (!r[j].is_zero()) rows_[i][j] -= c * r[j];
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t pos = (std::size_t)(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + (std::ptrdiff_t)pos, std::move(r));
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  Subspace s(*this);
  for (const auto& r : o.rows_) s.insert(r);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Zassenhaus: rref of [[U U],[V 0]]; rows with zero left half span U ^ V on the right
  const std::size_t n = ambient_;
  Matrix m(dim() + o.dim(), 2 * n, field_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = rows_[i][j];
      m.at(i, n + j) = rows_[i][j];
    }
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(dim() + i, j) = o.rows_[i][j];
  auto [r, piv] = rref(m);
  Subspace out(n, field_);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = r.at(i, j).is_zero();
    if (!left_zero) continue;
    Vec v(n, field_.zero());
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = r.at(i, n + j);
      nonzero = nonzero || !v[j].is_zero();
    }
    if (nonzero) out.insert(v);
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  auto [r, piv] = rref(m);
  const std::size_t n = m.cols();
  Subspace out(n, m.field());
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(n, m.field());
    v[j] = m.field().one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, j);
    out.insert(v);
  }
  return out;
}

// ------------------------------------------------------- QuotientDecomposition

QuotientDecomposition quotient_basis(const Subspace& ambient, const Subspace& sub) {
  if (!ambient.contains(sub)) throw SubspaceNotContained();
  const std::size_t n = ambient.ambient_dim();
  const Field& f = ambient.field();

  QuotientDecomposition q;
  q.field_ = f;

  Subspace grow(sub);
  for (const auto& row : ambient.basis())
    if (grow.insert(row)) q.complement_.push_back(row);

  // stacked basis B = [complement; sub]; precompute the elimination transform
  // of [B^T | I] so coordinates over B solve in O(n^2) per query
  std::vector<Vec> stacked(q.complement_);
  for (const auto& r : sub.basis()) stacked.push_back(r);
  const std::size_t a = stacked.size();
  q.stacked_cols_ = a;

  Matrix aug(n, a + n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a; ++j) aug.at(i, j) = stacked[j][i];
    aug.at(i, a + i) = f.one();
  }
  kernels::rref_inplace(aug);
  q.t_ = Matrix(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.t_.at(i, j) = aug.at(i, a + j);
  q.solver_rows_ = std::move(stacked);
  return q;
}

Vec QuotientDecomposition::coords(const Vec& x) const {
  Vec z = t_.apply(x);
  for (std::size_t i = stacked_cols_; i < z.size(); ++i)
    if (!z[i].is_zero()) throw SubspaceNotContained();
  return Vec(z.begin(), z.begin() + (std::ptrdiff_t)complement_.size());
}

Vec QuotientDecomposition::project(const Vec& x) const {
  Vec c = coords(x);
  Vec out = zero_vec(x.size(), field_);
  for (std::size_t i = 0; i < complement_.size(); ++i) vec_axpy(out, c[i], complement_[i]);
  return out;
}

// ---------------------------------------------------------------- solve

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  auto piv = kernels::rref_inplace(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  Vec x = zero_vec(n, a.field());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, n);
  return x;
}

// ---------------------------------------------------------------- char_poly

std::vector<FieldElem> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return {f.one()};

  // Samuelson-Berkowitz: iterate Toeplitz products over principal submatrices.
  // p holds coefficients high -> low.
  std::vector<FieldElem> p = {f.one(), -m.at(0, 0)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<FieldElem> s(k + 1, f.zero());
    s[0] = f.one();
    s[1] = -m.at(k - 1, k - 1);
    Vec v(k - 1);  // iterated M^t * C
    for (std::size_t i = 0; i < k - 1; ++i) v[i] = m.at(i, k - 1);
    for (std::size_t t = 2; t <= k; ++t) {
      FieldElem dot = f.zero();
      for (std::size_t i = 0; i < k - 1; ++i)
        if (!v[i].is_zero()) dot += m.at(k - 1, i) * v[i];
      s[t] = -dot;
      if (t < k) {
        Vec nv(k - 1, f.zero());
        for (std::size_t i = 0; i < k - 1; ++i)
          for (std::size_t j = 0; j < k - 1; ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) nv[i] += m.at(i, j) * v[j];
        v = std::move(nv);
      }
    }
    std::vector<FieldElem> np(k + 1, f.zero());
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i >= j && i - j <= k && !s[i - j].is_zero() && !p[j].is_zero()) np[i] += s[i - j] * p[j];
    p = std::move(np);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

Matrix poly_at_matrix(const std::vector<FieldElem>& coeffs, const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix acc(n, n, f);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = kernels::mat_mul(acc, m);
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += coeffs[i];
  }
  return acc;
}

// ---------------------------------------------------------------- eigenvalues

namespace {

FieldElem eval_poly(const std::vector<FieldElem>& c, const FieldElem& x, const Field& f) {
  FieldElem v = f.zero();
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

void factor_mpz(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long d = 2; d <= 100000UL; d == 2 ? d = 3 : d += 2) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[mpz_class(d)];
      n /= (long)d;
    }
    if (n == 1) return;
    if (mpz_class(d) * d > n) break;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  // Pollard rho for the rare large composite cofactor
  mpz_class c(1);
  while (true) {
    mpz_class x(2), y(2), d(1);
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) {
      factor_mpz(d, out);
      factor_mpz(n / d, out);
      return;
    }
    c += 1;
  }
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::map<mpz_class, unsigned> fac;
  factor_mpz(n, fac);
  std::vector<mpz_class> divs = {mpz_class(1)};
  for (const auto& [p, e] : fac) {
    std::size_t sz = divs.size();
    mpz_class pe(1);
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * pe);
    }
  }
  return divs;
}

}  // namespace

std::vector<Eigenpair> eigenvalues_in_field(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  const Field& f = m.field();
  const std::size_t n = m.rows();
  auto cp = char_poly(m);
  std::vector<FieldElem> roots;

  if (f.characteristic()) {
    for (std::uint64_t r = 0; r < f.characteristic(); ++r) {
      FieldElem x = FieldElem::mod_p(f.characteristic(), r);
      if (eval_poly(cp, x, f).is_zero()) roots.push_back(x);
    }
  } else {
    std::size_t low = 0;
    while (low < cp.size() && cp[low].is_zero()) ++low;
    if (low > 0) roots.push_back(f.zero());
    if (low + 1 < cp.size()) {
      // integer-scale the x^low cofactor; rational roots are u/v with
      // u | constant and v | leading
      std::vector<Rat> q;
      mpz_class den_lcm(1);
      for (std::size_t i = low; i < cp.size(); ++i) {
        q.push_back(cp[i].rat());
        mpz_class d = q.back().denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
      }
      mpz_class c0 = q.front().numerator() * (den_lcm / q.front().denominator());
      mpz_class cl = q.back().numerator() * (den_lcm / q.back().denominator());
      auto us = divisors_of(c0);
      auto vs = divisors_of(cl);
      for (const auto& u : us)
        for (const auto& v : vs) {
          mpz_class g;
          mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
          if (g != 1) continue;
          for (int sign = 0; sign < 2; ++sign) {
            Rat cand(mpq_class(sign ? mpz_class(-u) : u, v));
            FieldElem x = FieldElem::rational(cand);
            if (eval_poly(cp, x, f).is_zero()) roots.push_back(x);
          }
        }
    }
    std::sort(roots.begin(), roots.end(), field_less);
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const FieldElem& a, const FieldElem& b) { return a == b; }),
                roots.end());
  }

  std::vector<Eigenpair> out;
  for (const auto& lam : roots) {
    Matrix shifted(m);
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= lam;
    Subspace es = kernel(shifted);
    if (es.dim() > 0) out.push_back({lam, std::move(es)});
  }
  return out;
}

}  // namespace hh1
