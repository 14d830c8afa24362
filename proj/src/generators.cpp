#include "hh1/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hh1/errors.hpp"

namespace hh1 {

std::string gen_kronecker(const Field& f) {
  BoundQuiverPresentation p;
  p.name = "kronecker";
  p.field = f;
  p.quiver.vertex_count = 2;
  p.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  p.truncation = 2;
  return emit_presentation(p);
}

std::string gen_trunc_poly(int n, const Field& f) {
  if (n < 2) throw Error("trunc-poly needs n >= 2");
  BoundQuiverPresentation p;
  p.name = "trunc-poly-" + std::to_string(n);
  p.field = f;
  p.quiver.vertex_count = 1;
  p.quiver.arrows = {{"x", 0, 0}};
  p.truncation = n;
  return emit_presentation(p);
}

std::string gen_nakayama(int e, int L, const Field& f) {
  if (e < 1) throw Error("nakayama needs e >= 1");
  if (L < 2) throw Error("nakayama needs L >= 2");
  if (e == 1) return gen_trunc_poly(L, f);
  BoundQuiverPresentation p;
  p.name = "nakayama-" + std::to_string(e) + "-" + std::to_string(L);
  p.field = f;
  p.quiver.vertex_count = e;
  for (int i = 0; i < e; ++i)
    p.quiver.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % e});
  p.truncation = L;
  return emit_presentation(p);
}

std::string gen_rad_square_zero(int vertices, const std::vector<std::pair<int, int>>& edges,
                                const Field& f) {
  if (vertices < 1) throw Error("rad-sq-zero needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [s, t] : edges) {
    if (s < 0 || s >= vertices || t < 0 || t >= vertices)
      throw Error("rad-sq-zero edge endpoint out of range");
    if (s == t) throw Error("rad-sq-zero digraph must have no loops");
    if (!seen.insert({s, t}).second) throw Error("rad-sq-zero digraph must have no repeated edges");
  }
  std::vector<std::pair<int, int>> sorted(seen.begin(), seen.end());
  BoundQuiverPresentation p;
  std::ostringstream nm;
  nm << "rad-sq-zero";
  for (const auto& [s, t] : sorted) nm << "-" << s << t;
  p.name = nm.str();
  p.field = f;
  p.quiver.vertex_count = vertices;
  int k = 0;
  for (const auto& [s, t] : sorted)
    p.quiver.arrows.push_back({"a" + std::to_string(k++), s, t});
  p.truncation = 2;
  return emit_presentation(p);
}

LieSC gen_witt_lie(std::uint64_t p) {
  if (!is_prime_u64(p) || p < 3) throw Error("witt algebra needs an odd prime");
  Field f = Field::prime(p);
  const int n = (int)p;
  // derivation matrices of k[x]/(x^p) on the basis 1, x, ..., x^{p-1}:
  // f_i sends x^m to m x^{m+i+1}; index i runs from -1 to p-2
  std::vector<Matrix> fmat;
  for (int i = -1; i <= n - 2; ++i) {
    Matrix m((std::size_t)n, (std::size_t)n, f);
    for (int deg = 1; deg < n; ++deg) {
      int out = deg + i;
      if (out < 0 || out >= n) continue;
      m.at((std::size_t)out, (std::size_t)deg) = f.from_int(deg);
    }
    fmat.push_back(std::move(m));
  }
  // a derivation of k[x]/(x^p) is determined by its value on x; expand
  // commutators through the x-column
  kernels::BracketTable table((std::size_t)n, std::vector<Vec>((std::size_t)n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix br = kernels::commutator(fmat[(std::size_t)i], fmat[(std::size_t)j]);
      Vec xcol = br.col(1);  // image of x
      Vec coords = zero_vec((std::size_t)n, f);
      for (int deg = 0; deg < n; ++deg) {
        // x^deg component comes from f_{deg-1}
        coords[(std::size_t)deg] = xcol[(std::size_t)deg];
      }
      table[(std::size_t)i][(std::size_t)j] = coords;
    }
  return LieSC::from_table(f, std::move(table), "witt-" + std::to_string(p));
}

}  // namespace hh1
