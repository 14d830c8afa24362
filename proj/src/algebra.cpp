#include "hh1/algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "hh1/errors.hpp"

namespace hh1 {

// ---------------------------------------------------------------- ScAlgebra

Vec ScAlgebra::unit() const {
  Vec u = zero_vec((std::size_t)dim, field);
  for (int i : idempotents) u[(std::size_t)i] = field.one();
  return u;
}

Vec ScAlgebra::mul_basis_vec(int u, const Vec& y) const {
  Vec out = zero_vec((std::size_t)dim, field);
  for (int v = 0; v < dim; ++v) {
    if (y[(std::size_t)v].is_zero()) continue;
    for (const auto& [w, c] : prod_row(u, v)) out[(std::size_t)w] += y[(std::size_t)v] * c;
  }
  return out;
}

Vec ScAlgebra::mul_vec_basis(const Vec& x, int v) const {
  Vec out = zero_vec((std::size_t)dim, field);
  for (int u = 0; u < dim; ++u) {
    if (x[(std::size_t)u].is_zero()) continue;
    for (const auto& [w, c] : prod_row(u, v)) out[(std::size_t)w] += x[(std::size_t)u] * c;
  }
  return out;
}

Vec ScAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out = zero_vec((std::size_t)dim, field);
  for (int u = 0; u < dim; ++u) {
    if (x[(std::size_t)u].is_zero()) continue;
    for (int v = 0; v < dim; ++v) {
      if (y[(std::size_t)v].is_zero()) continue;
      FieldElem c = x[(std::size_t)u] * y[(std::size_t)v];
      for (const auto& [w, d] : prod_row(u, v)) out[(std::size_t)w] += c * d;
    }
  }
  return out;
}

Subspace ScAlgebra::radical() const {
  Subspace s((std::size_t)dim, field);
  for (int i = 0; i < dim; ++i)
    if (length[(std::size_t)i] >= 1) {
      Vec v = zero_vec((std::size_t)dim, field);
      v[(std::size_t)i] = field.one();
      s.insert(v);
    }
  return s;
}

Subspace ScAlgebra::radical_power(int m) const {
  if (m <= 0) return Subspace::full((std::size_t)dim, field);
  Subspace cur = radical();
  std::vector<int> rad_basis;
  for (int i = 0; i < dim; ++i)
    if (length[(std::size_t)i] >= 1) rad_basis.push_back(i);
  for (int step = 2; step <= m && cur.dim() > 0; ++step) {
    Subspace next((std::size_t)dim, field);
    for (int u : rad_basis)
      for (const auto& row : cur.basis()) {
        Vec p = mul_basis_vec(u, row);
        if (!vec_is_zero(p)) next.insert(p);
      }
    cur = std::move(next);
  }
  return cur;
}

int ScAlgebra::loewy_length() const {
  int m = 1;
  Subspace cur = radical();
  std::vector<int> rad_basis;
  for (int i = 0; i < dim; ++i)
    if (length[(std::size_t)i] >= 1) rad_basis.push_back(i);
  while (cur.dim() > 0) {
    if (m > dim + 1) throw Error("radical is not nilpotent");
    Subspace next((std::size_t)dim, field);
    for (int u : rad_basis)
      for (const auto& row : cur.basis()) {
        Vec p = mul_basis_vec(u, row);
        if (!vec_is_zero(p)) next.insert(p);
      }
    cur = std::move(next);
    ++m;
  }
  return m;
}

Subspace ScAlgebra::commutator_subspace() const {
  Subspace s((std::size_t)dim, field);
  for (int u = 0; u < dim; ++u)
    for (int v = u + 1; v < dim; ++v) {
      Vec c = zero_vec((std::size_t)dim, field);
      for (const auto& [w, d] : prod_row(u, v)) c[(std::size_t)w] += d;
      for (const auto& [w, d] : prod_row(v, u)) c[(std::size_t)w] -= d;
      if (!vec_is_zero(c)) s.insert(c);
    }
  return s;
}

Subspace ScAlgebra::center() const {
  // z b_u = b_u z for all u; rows indexed by (u, coordinate)
  std::vector<Vec> rows;
  for (int u = 0; u < dim; ++u) {
    std::vector<Vec> block((std::size_t)dim, zero_vec((std::size_t)dim, field));
    for (int r = 0; r < dim; ++r) {
      for (const auto& [w, c] : prod_row(r, u)) block[(std::size_t)w][(std::size_t)r] += c;
      for (const auto& [w, c] : prod_row(u, r)) block[(std::size_t)w][(std::size_t)r] -= c;
    }
    for (auto& b : block)
      if (!vec_is_zero(b)) rows.push_back(std::move(b));
  }
  Matrix m = Matrix::from_rows(rows, (std::size_t)dim, field);
  return kernel(m);
}

// ---------------------------------------------------------------- PathSpace

int PathSpace::find(const std::vector<int>& arrows, int vertex) const {
  if (arrows.empty()) {
    if (vertex < 0 || vertex >= (int)trivial_.size()) return -1;
    return trivial_[(std::size_t)vertex];
  }
  auto it = by_word_.find(arrows);
  return it == by_word_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------- build

namespace {

constexpr int kMaxPaths = 200000;

// left/right multiplication by an arrow in raw path coordinates
Vec arrow_mul(const PathSpace& ps, const Quiver& q, int arrow, const Vec& v, bool left,
              const Field& f) {
  Vec out = zero_vec(v.size(), f);
  bool any = false;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    const auto& p = ps.paths[idx];
    if (left) {
      if (q.arrows[(std::size_t)arrow].target != p.source) continue;
    } else {
      if (p.target != q.arrows[(std::size_t)arrow].source) continue;
    }
    if (p.len + 1 >= ps.truncation) continue;
    std::vector<int> word;
    word.reserve((std::size_t)p.len + 1);
    if (left) {
      word.push_back(arrow);
      word.insert(word.end(), p.arrows.begin(), p.arrows.end());
    } else {
      word = p.arrows;
      word.push_back(arrow);
    }
    int j = ps.find(word);
    if (j < 0) throw Error("internal: composable short word missing from path space");
    out[(std::size_t)j] += v[idx];
    any = true;
  }
  if (!any) return Vec{};
  return out;
}

}  // namespace

FdAlgebra FdAlgebra::build(const BoundQuiverPresentation& pres) {
  FdAlgebra A;
  A.pres_ = pres;
  const Quiver& Q = pres.quiver;
  const Field& F = pres.field;
  const int N = pres.truncation;

  // arrows ranked by name for the canonical lexicographic order
  std::vector<int> by_name((std::size_t)Q.arrows.size());
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(),
            [&](int a, int b) { return Q.arrows[(std::size_t)a].name < Q.arrows[(std::size_t)b].name; });

  PathSpace& ps = A.pspace_;
  ps.truncation = N;
  ps.trivial_.resize((std::size_t)Q.vertex_count);
  for (int v = 0; v < Q.vertex_count; ++v) {
    ps.trivial_[(std::size_t)v] = (int)ps.paths.size();
    ps.paths.push_back({v, v, 0, {}});
  }
  std::size_t level_begin = 0, level_end = ps.paths.size();
  for (int len = 1; len < N; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const auto p = ps.paths[i];  // copy: paths vector reallocates
      for (int a : by_name) {
        if (p.target != Q.arrows[(std::size_t)a].source) continue;
        std::vector<int> word = p.arrows;
        word.push_back(a);
        ps.by_word_[word] = (int)ps.paths.size();
        ps.paths.push_back({p.source, Q.arrows[(std::size_t)a].target, len, std::move(word)});
        if ((int)ps.paths.size() > kMaxPaths) throw Error("path space too large");
      }
    }
    level_begin = level_end;
    level_end = ps.paths.size();
    if (level_begin == level_end) break;  // no paths of this length
  }
  // extending name-sorted prefixes by name-ranked arrows is prefix-major, which
  // is not the sequence-lexicographic order; sort each level explicitly
  {
    std::vector<int> rank((std::size_t)Q.arrows.size());
    for (std::size_t i = 0; i < by_name.size(); ++i) rank[(std::size_t)by_name[i]] = (int)i;
    std::stable_sort(ps.paths.begin(), ps.paths.end(), [&](const PathSpace::Path& x,
                                                           const PathSpace::Path& y) {
      if (x.len != y.len) return x.len < y.len;
      if (x.len == 0) return x.source < y.source;
      for (std::size_t k = 0; k < x.arrows.size(); ++k) {
        int rx = rank[(std::size_t)x.arrows[k]], ry = rank[(std::size_t)y.arrows[k]];
        if (rx != ry) return rx < ry;
      }
      return false;
    });
    ps.by_word_.clear();
    for (std::size_t i = 0; i < ps.paths.size(); ++i) {
      if (ps.paths[i].len == 0)
        ps.trivial_[(std::size_t)ps.paths[i].source] = (int)i;
      else
        ps.by_word_[ps.paths[i].arrows] = (int)i;
    }
  }
  A.trivial_path_ = ps.trivial_;
  const int P = ps.count();

  // ideal span: endpoint-homogeneous relation components, closed under
  // left/right multiplication by arrows
  A.ideal_ = Subspace((std::size_t)P, F);
  std::deque<Vec> work;
  for (const auto& rel : pres.relations) {
    std::map<std::pair<int, int>, Vec> comp;
    for (const auto& t : rel.terms) {
      int idx = ps.find(t.arrows);
      if (idx < 0) throw Error("internal: relation term missing from path space");
      const auto& p = ps.paths[(std::size_t)idx];
      auto key = std::make_pair(p.source, p.target);
      auto it = comp.find(key);
      if (it == comp.end()) it = comp.emplace(key, zero_vec((std::size_t)P, F)).first;
      it->second[(std::size_t)idx] += t.coeff;
    }
    for (auto& [key, v] : comp)
      if (!vec_is_zero(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    Vec v = std::move(work.front());
    work.pop_front();
    if (!A.ideal_.insert(v)) continue;
    for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
      Vec l = arrow_mul(ps, Q, (int)a, v, true, F);
      if (!l.empty()) work.push_back(std::move(l));
      Vec r = arrow_mul(ps, Q, (int)a, v, false, F);
      if (!r.empty()) work.push_back(std::move(r));
    }
  }

  // basis: non-pivot paths, in canonical path order
  A.path_to_basis_.assign((std::size_t)P, -1);
  {
    std::vector<bool> is_pivot((std::size_t)P, false);
    for (auto p : A.ideal_.pivots()) is_pivot[p] = true;
    for (int i = 0; i < P; ++i)
      if (!is_pivot[(std::size_t)i]) {
        A.path_to_basis_[(std::size_t)i] = (int)A.basis_paths_.size();
        A.basis_paths_.push_back(i);
      }
  }
  const int dim = (int)A.basis_paths_.size();

  // normal form of every path
  A.nf_of_path_.assign((std::size_t)P, Vec{});
  for (int q = 0; q < P; ++q) {
    Vec nf = zero_vec((std::size_t)dim, F);
    if (A.path_to_basis_[(std::size_t)q] >= 0) {
      nf[(std::size_t)A.path_to_basis_[(std::size_t)q]] = F.one();
    } else {
      Vec unit = zero_vec((std::size_t)P, F);
      unit[(std::size_t)q] = F.one();
      Vec resid = A.ideal_.reduce(unit);  // supported on non-pivot paths
      Vec rest = vec_sub(unit, resid);    // unit = rest (in ideal) + resid
      for (int j = 0; j < P; ++j)
        if (!resid[(std::size_t)j].is_zero()) {
          int b = A.path_to_basis_[(std::size_t)j];
          if (b < 0) throw Error("internal: reduced path vector touches a pivot");
          nf[(std::size_t)b] = resid[(std::size_t)j];
        }
      (void)rest;
    }
    A.nf_of_path_[(std::size_t)q] = std::move(nf);
  }

  // structure constants
  ScAlgebra& sc = A.sc_;
  sc.field = F;
  sc.dim = dim;
  sc.length.resize((std::size_t)dim);
  sc.source.resize((std::size_t)dim);
  sc.target.resize((std::size_t)dim);
  for (int b = 0; b < dim; ++b) {
    const auto& p = ps.paths[(std::size_t)A.basis_paths_[(std::size_t)b]];
    sc.length[(std::size_t)b] = p.len;
    sc.source[(std::size_t)b] = p.source;
    sc.target[(std::size_t)b] = p.target;
  }
  for (int v = 0; v < Q.vertex_count; ++v)
    sc.idempotents.push_back(A.path_to_basis_[(std::size_t)ps.trivial_[(std::size_t)v]]);
  sc.products.assign((std::size_t)dim * dim, {});
  for (int u = 0; u < dim; ++u) {
    const auto& pu = ps.paths[(std::size_t)A.basis_paths_[(std::size_t)u]];
    for (int v = 0; v < dim; ++v) {
      const auto& pv = ps.paths[(std::size_t)A.basis_paths_[(std::size_t)v]];
      if (pu.target != pv.source) continue;
      if (pu.len + pv.len >= N) continue;
      std::vector<int> word = pu.arrows;
      word.insert(word.end(), pv.arrows.begin(), pv.arrows.end());
      int idx = ps.find(word, pu.source);
      if (idx < 0) throw Error("internal: product word missing from path space");
      const Vec& nf = A.nf_of_path_[(std::size_t)idx];
      auto& row = sc.products[(std::size_t)u * dim + v];
      for (int w = 0; w < dim; ++w)
        if (!nf[(std::size_t)w].is_zero()) row.emplace_back(w, nf[(std::size_t)w]);
    }
  }

  int maxlen = 0;
  for (int b = 0; b < dim; ++b) maxlen = std::max(maxlen, sc.length[(std::size_t)b]);
  A.loewy_ = maxlen + 1;

  // build-time verification: associativity on all basis triples, idempotent laws
  if (auto bad = kernels::assoc_defect(sc.products, dim, F))
    throw Error("structure constants are not associative at triple (" +
                std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                std::to_string((*bad)[2]) + ")");
  for (int i = 0; i < Q.vertex_count; ++i)
    for (int j = 0; j < Q.vertex_count; ++j) {
      const auto& row = sc.prod_row(sc.idempotents[(std::size_t)i], sc.idempotents[(std::size_t)j]);
      if (i != j && !row.empty()) throw Error("idempotents are not orthogonal");
      if (i == j &&
          !(row.size() == 1 && row[0].first == sc.idempotents[(std::size_t)i] && row[0].second.is_one()))
        throw Error("vertex idempotent is not idempotent");
    }
  return A;
}

int FdAlgebra::basis_index_of_arrow(int arrow_index) const {
  int idx = pspace_.find({arrow_index});
  if (idx < 0) throw Error("internal: arrow missing from path space");
  return path_to_basis_[(std::size_t)idx];
}

Vec FdAlgebra::normal_form(const Vec& path_vec) const {
  Vec out = zero_vec((std::size_t)sc_.dim, sc_.field);
  for (std::size_t i = 0; i < path_vec.size(); ++i)
    if (!path_vec[i].is_zero()) vec_axpy(out, path_vec[i], nf_of_path_[i]);
  return out;
}

Subspace FdAlgebra::radical_power_span(int m) const {
  Subspace s((std::size_t)sc_.dim, sc_.field);
  for (int b = 0; b < sc_.dim; ++b)
    if (sc_.length[(std::size_t)b] >= m) {
      Vec v = zero_vec((std::size_t)sc_.dim, sc_.field);
      v[(std::size_t)b] = sc_.field.one();
      s.insert(v);
    }
  return s;
}

std::string FdAlgebra::basis_label(int basis_index) const {
  const auto& p = pspace_.paths[(std::size_t)basis_paths_[(std::size_t)basis_index]];
  if (p.len == 0) return "e" + std::to_string(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += pres_.quiver.arrows[(std::size_t)p.arrows[i]].name;
  }
  return s;
}

std::vector<std::vector<int>> FdAlgebra::ext1_matrix() const {
  const int n = simple_count();
  std::vector<std::vector<int>> ext((std::size_t)n, std::vector<int>((std::size_t)n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Subspace jspan((std::size_t)sc_.dim, sc_.field), j2span((std::size_t)sc_.dim, sc_.field);
      for (int b = 0; b < sc_.dim; ++b) {
        if (sc_.source[(std::size_t)b] != i || sc_.target[(std::size_t)b] != j) continue;
        if (sc_.length[(std::size_t)b] < 1) continue;
        Vec v = zero_vec((std::size_t)sc_.dim, sc_.field);
        v[(std::size_t)b] = sc_.field.one();
        jspan.insert(v);
        if (sc_.length[(std::size_t)b] >= 2) j2span.insert(v);
      }
      int d = (int)quotient_basis(jspan, j2span).dim();
      int arrows = 0;
      for (const auto& a : pres_.quiver.arrows)
        if (a.source == i && a.target == j) ++arrows;
      if (d != arrows) throw Error("Ext^1 dimension disagrees with the arrow count");
      ext[(std::size_t)j][(std::size_t)i] = d;
    }
  return ext;
}

QuiverClass FdAlgebra::quiver_class() const {
  auto ext = ext1_matrix();
  QuiverClass qc{false, 0, false};
  const int n = simple_count();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && ext[(std::size_t)i][(std::size_t)j] > 0) qc.has_loops = true;
      qc.max_parallel = std::max(qc.max_parallel, ext[(std::size_t)i][(std::size_t)j]);
    }
  qc.is_simple_digraph = !qc.has_loops && qc.max_parallel <= 1;
  return qc;
}

bool FdAlgebra::connected() const {
  const int n = simple_count();
  std::vector<int> comp((std::size_t)n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[(std::size_t)x] != x) x = comp[(std::size_t)x] = comp[(std::size_t)comp[(std::size_t)x]];
    return x;
  };
  for (const auto& a : pres_.quiver.arrows) comp[(std::size_t)find(a.source)] = find(a.target);
  int root = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

// ---------------------------------------------------------------- truncation

TruncatedAlgebra truncate_algebra(const FdAlgebra& a, int m) {
  if (m < 1) throw Error("truncation degree must be >= 1");
  if (m >= a.loewy_length()) {
    return {a, Matrix::identity((std::size_t)a.dim(), a.field())};
  }
  BoundQuiverPresentation p2;
  p2.field = a.field();
  p2.truncation = std::max(m, 2);
  if (!a.presentation().name.empty())
    p2.name = a.presentation().name + "-mod-J" + std::to_string(m);
  if (m == 1) {
    p2.quiver.vertex_count = a.quiver().vertex_count;
    p2.truncation = 2;
  } else {
    p2.quiver = a.quiver();
    // generating relations: ideal rows with a pivot of length < m, truncated
    for (std::size_t r = 0; r < a.ideal().dim(); ++r) {
      const Vec& row = a.ideal().basis()[r];
      int pivot_len = a.path_space().paths[a.ideal().pivots()[r]].len;
      if (pivot_len >= m) continue;
      PathVector pv;
      for (std::size_t idx = 0; idx < row.size(); ++idx) {
        if (row[idx].is_zero()) continue;
        const auto& path = a.path_space().paths[idx];
        if (path.len >= m) continue;
        pv.terms.push_back({row[idx], path.arrows});
      }
      if (!pv.terms.empty()) p2.relations.push_back(std::move(pv));
    }
  }
  FdAlgebra b = FdAlgebra::build(p2);
  Matrix q((std::size_t)b.dim(), (std::size_t)a.dim(), a.field());
  for (int ai = 0; ai < a.dim(); ++ai) {
    const auto& path = a.path_space().paths[(std::size_t)a.basis_paths()[(std::size_t)ai]];
    if (path.len >= m) continue;
    int pidx = b.path_space().find(path.arrows, path.source);
    int bi = pidx >= 0 ? b.basis_index_of_path(pidx) : -1;
    if (bi < 0) throw Error("internal: short basis path missing from the truncated algebra");
    q.at((std::size_t)bi, (std::size_t)ai) = a.field().one();
  }
  return {std::move(b), std::move(q)};
}

// ---------------------------------------------------------------- corners

CornerAlgebra corner_of_sc(const ScAlgebra& sc, const std::vector<int>& vertices) {
  if (vertices.empty()) throw EmptySubset();
  std::set<int> vs(vertices.begin(), vertices.end());
  CornerAlgebra c;
  c.vertex_subset.assign(vs.begin(), vs.end());
  std::vector<int> back((std::size_t)sc.dim, -1);
  for (int b = 0; b < sc.dim; ++b)
    if (vs.count(sc.source[(std::size_t)b]) && vs.count(sc.target[(std::size_t)b])) {
      back[(std::size_t)b] = (int)c.index_map.size();
      c.index_map.push_back(b);
    }
  const int d = (int)c.index_map.size();
  c.sc.field = sc.field;
  c.sc.dim = d;
  c.sc.products.assign((std::size_t)d * d, {});
  for (int u = 0; u < d; ++u) {
    c.sc.length.push_back(sc.length[(std::size_t)c.index_map[(std::size_t)u]]);
    c.sc.source.push_back(sc.source[(std::size_t)c.index_map[(std::size_t)u]]);
    c.sc.target.push_back(sc.target[(std::size_t)c.index_map[(std::size_t)u]]);
  }
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      for (const auto& [w, coeff] : sc.prod_row(c.index_map[(std::size_t)u], c.index_map[(std::size_t)v])) {
        if (back[(std::size_t)w] < 0) throw Error("corner is not closed under multiplication");
        c.sc.products[(std::size_t)u * d + v].emplace_back(back[(std::size_t)w], coeff);
      }
    }
  for (int i : sc.idempotents)
    if (back[(std::size_t)i] >= 0) c.sc.idempotents.push_back(back[(std::size_t)i]);
  c.identity_in_ambient = zero_vec((std::size_t)sc.dim, sc.field);
  for (int i : sc.idempotents)
    if (vs.count(sc.source[(std::size_t)i])) c.identity_in_ambient[(std::size_t)i] = sc.field.one();
  (void)c.sc.loewy_length();  // re-verify nilpotency of the corner radical
  return c;
}

CornerAlgebra corner_algebra(const FdAlgebra& a, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= a.simple_count()) throw Error("corner vertex out of range");
  return corner_of_sc(a.sc(), vertices);
}

// ---------------------------------------------------------------- symmetry

namespace {

bool gram_invertible(const ScAlgebra& a, const Vec& lambda) {
  Matrix g((std::size_t)a.dim, (std::size_t)a.dim, a.field);
  for (int u = 0; u < a.dim; ++u)
    for (int v = 0; v < a.dim; ++v) {
      FieldElem s = a.field.zero();
      for (const auto& [w, c] : a.prod_row(u, v))
        if (!lambda[(std::size_t)w].is_zero()) s += c * lambda[(std::size_t)w];
      g.at((std::size_t)u, (std::size_t)v) = s;
    }
  return rank(g) == (std::size_t)a.dim;
}

}  // namespace

SymmetricForm is_symmetric(const ScAlgebra& a, std::uint64_t seed) {
  const Field& f = a.field;
  Subspace comm = a.commutator_subspace();
  Matrix comm_rows = Matrix::from_rows(comm.basis(), (std::size_t)a.dim, f);
  Subspace form_space = kernel(comm_rows);
  if (form_space.dim() == 0) return {Ternary::No, {}, "form space is zero"};

  int top = 0;
  for (int b = 0; b < a.dim; ++b) top = std::max(top, a.length[(std::size_t)b]);
  Vec socle_dual = zero_vec((std::size_t)a.dim, f);
  for (int b = 0; b < a.dim; ++b)
    if (a.length[(std::size_t)b] == top) socle_dual[(std::size_t)b] = f.one();
  if (form_space.contains(socle_dual) && gram_invertible(a, socle_dual))
    return {Ternary::Yes, socle_dual, "socle dual"};

  for (int b = 0; b < a.dim; ++b) {
    Vec lam = zero_vec((std::size_t)a.dim, f);
    lam[(std::size_t)b] = f.one();
    if (form_space.contains(lam) && gram_invertible(a, lam))
      return {Ternary::Yes, lam, "basis dual"};
  }

  // determinant of the Gram matrix is a polynomial of individual degree <= dim
  // in the form-space coordinates; a grid with side > dim certifies a "no"
  const std::size_t d_f = form_space.dim();
  const std::size_t side = (std::size_t)a.dim + 1;
  bool grid_feasible = true;
  if (f.characteristic() && f.characteristic() < side) grid_feasible = false;
  double count = 1;
  for (std::size_t i = 0; i < d_f && grid_feasible; ++i) {
    count *= (double)side;
    if (count > 50000.0) grid_feasible = false;
  }
  if (grid_feasible) {
    std::vector<std::size_t> tup(d_f, 0);
    while (true) {
      Vec lam = zero_vec((std::size_t)a.dim, f);
      bool all_zero = true;
      for (std::size_t k = 0; k < d_f; ++k) {
        if (tup[k] == 0) continue;
        all_zero = false;
        vec_axpy(lam, f.from_int((long long)tup[k]), form_space.basis()[k]);
      }
      if (!all_zero && gram_invertible(a, lam)) return {Ternary::Yes, lam, "grid"};
      std::size_t k = 0;
      while (k < d_f && ++tup[k] == side) tup[k++] = 0;
      if (k == d_f) break;
    }
    return {Ternary::No, {}, "grid certificate"};
  }

  Rng rng(seed ^ 0x73796d6dULL);
  for (int trial = 0; trial < 48; ++trial) {
    Vec lam = zero_vec((std::size_t)a.dim, f);
    for (std::size_t k = 0; k < d_f; ++k)
      vec_axpy(lam, rng.field_elem(f, 20), form_space.basis()[k]);
    if (!vec_is_zero(lam) && gram_invertible(a, lam)) return {Ternary::Yes, lam, "random"};
  }
  return {Ternary::Inconclusive, {}, "random trials exhausted"};
}

}  // namespace hh1
