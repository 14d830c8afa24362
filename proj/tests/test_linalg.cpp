#include <doctest.h>

#include "hh1/generators.hpp"
#include "hh1/linalg.hpp"
#include "hh1/rng.hpp"

using namespace hh1;

namespace {

Matrix from_ints(std::initializer_list<std::initializer_list<long long>> rows, const Field& f) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(r, c, f);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

Matrix random_matrix(std::size_t r, std::size_t c, const Field& f, Rng& rng) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.field_elem(f, 5);
  return m;
}

}  // namespace

TEST_CASE("rref on the stated examples") {
  Field q = Field::rationals();
  auto [r1, p1] = rref(Matrix::identity(2, q));
  CHECK(r1 == Matrix::identity(2, q));
  CHECK(p1 == std::vector<std::size_t>{0, 1});

  auto [r2, p2] = rref(Matrix(3, 3, q));
  CHECK(r2.is_zero());
  CHECK(p2.empty());

  auto [r3, p3] = rref(from_ints({{2, 4}, {1, 2}}, q));
  CHECK(r3 == from_ints({{1, 2}, {0, 0}}, q));
  CHECK(p3 == std::vector<std::size_t>{1 - 1});
}

TEST_CASE("rref is idempotent on random matrices") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    Rng rng(f.characteristic() + 99);
    for (int trial = 0; trial < 12; ++trial) {
      Matrix m = random_matrix(5, 7, f, rng);
      auto [r, p] = rref(m);
      auto [rr, pp] = rref(r);
      CHECK(r == rr);
      CHECK(p == pp);
    }
  }
}

TEST_CASE("kernel on the stated examples") {
  Field q = Field::rationals();
  CHECK(kernel(Matrix::identity(4, q)).dim() == 0);
  CHECK(kernel(Matrix(2, 3, q)).dim() == 3);

  Field f3 = Field::prime(3);
  Matrix m = from_ints({{1, 1}}, f3);
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  // oracle: enumerate all 9 vectors of F_3^2 and collect the annihilated ones
  std::vector<Vec> zeros;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Vec v = {f3.from_int(a), f3.from_int(b)};
      if (vec_is_zero(m.apply(v)) && !vec_is_zero(v)) zeros.push_back(v);
    }
  CHECK(zeros.size() == 2);  // (1,2) and (2,1)
  for (const auto& v : zeros) CHECK(k.contains(v));
  CHECK(k.basis()[0] == Vec{f3.one(), f3.from_int(2)});
}

TEST_CASE("rank plus nullity equals the column count") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    Rng rng(f.characteristic() + 7);
    for (int trial = 0; trial < 12; ++trial) {
      Matrix m = random_matrix(4 + trial % 3, 6, f, rng);
      CHECK(rank(m) + kernel(m).dim() == m.cols());
    }
  }
}

TEST_CASE("quotient_basis trivial cases") {
  Field q = Field::rationals();
  Subspace amb = Subspace::full(3, q);

  auto same = quotient_basis(amb, amb);
  CHECK(same.dim() == 0);

  Subspace zero(3, q);
  auto whole = quotient_basis(amb, zero);
  CHECK(whole.dim() == 3);
  Vec x = {q.from_int(2), q.from_int(-1), q.from_int(5)};
  CHECK(whole.project(x) == x);
}

TEST_CASE("quotient of Q^3 by the first axis") {
  Field q = Field::rationals();
  Subspace amb = Subspace::full(3, q);
  Subspace sub(3, q);
  sub.insert({q.one(), q.zero(), q.zero()});
  auto dec = quotient_basis(amb, sub);
  REQUIRE(dec.dim() == 2);
  CHECK(dec.complement()[0] == Vec{q.zero(), q.one(), q.zero()});
  CHECK(dec.complement()[1] == Vec{q.zero(), q.zero(), q.one()});
  // projection drops the first coordinate and restores complement elements
  Vec x = {q.from_int(9), q.from_int(3), q.from_int(-4)};
  CHECK(dec.coords(x) == Vec{q.from_int(3), q.from_int(-4)});
  for (const auto& c : dec.complement()) CHECK(dec.project(c) == c);
  // kernel of the projection is exactly the subspace
  CHECK(vec_is_zero(dec.project({q.from_int(5), q.zero(), q.zero()})));
}

TEST_CASE("quotient_basis rejects subspaces outside the ambient") {
  Field q = Field::rationals();
  Subspace amb(3, q);
  amb.insert({q.one(), q.zero(), q.zero()});
  Subspace sub(3, q);
  sub.insert({q.zero(), q.one(), q.zero()});
  CHECK_THROWS_AS(quotient_basis(amb, sub), SubspaceNotContained);
}

TEST_CASE("projection is linear with kernel the subspace (randomized)") {
  Field f = Field::prime(11);
  Rng rng(31);
  Matrix rows = random_matrix(4, 6, f, rng);
  Subspace amb = Subspace::from_rows(6, f, {rows.row(0), rows.row(1), rows.row(2), rows.row(3)});
  Subspace sub = Subspace::from_rows(6, f, {rows.row(0), rows.row(1)});
  auto dec = quotient_basis(amb, sub);
  CHECK(dec.dim() == amb.dim() - sub.dim());
  for (int t = 0; t < 8; ++t) {
    Vec a = zero_vec(6, f), b = zero_vec(6, f);
    for (const auto& r : amb.basis()) {
      vec_axpy(a, rng.field_elem(f), r);
      vec_axpy(b, rng.field_elem(f), r);
    }
    CHECK(dec.coords(vec_add(a, b)) == vec_add(dec.coords(a), dec.coords(b)));
  }
  for (const auto& s : sub.basis()) CHECK(vec_is_zero(dec.coords(s)));
}

TEST_CASE("characteristic polynomial on the stated examples") {
  Field q = Field::rationals();
  auto cp1 = char_poly(Matrix::identity(2, q));
  CHECK(cp1 == std::vector<FieldElem>{q.one(), q.from_int(-2), q.one()});

  Matrix d = from_ints({{2, 0}, {0, -2}}, q);
  CHECK(char_poly(d) == std::vector<FieldElem>{q.from_int(-4), q.zero(), q.one()});

  // companion matrix of x^3 + x + 1 over F_2 reproduces its polynomial
  Field f2 = Field::prime(2);
  Matrix comp = from_ints({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}, f2);
  CHECK(char_poly(comp) == std::vector<FieldElem>{f2.one(), f2.one(), f2.zero(), f2.one()});

  CHECK_THROWS_AS(char_poly(Matrix(2, 3, q)), NotSquare);
}

TEST_CASE("Cayley-Hamilton on random small matrices") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    Rng rng(f.characteristic() + 17);
    for (int trial = 0; trial < 8; ++trial) {
      Matrix m = random_matrix(4, 4, f, rng);
      CHECK(poly_at_matrix(char_poly(m), m).is_zero());
    }
  }
}

TEST_CASE("eigenvalues in the field, canonical order") {
  Field q = Field::rationals();
  Matrix d = from_ints({{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}, q);
  auto eig = eigenvalues_in_field(d);
  REQUIRE(eig.size() == 3);
  CHECK(eig[0].value == q.from_int(-2));
  CHECK(eig[1].value == q.zero());
  CHECK(eig[2].value == q.from_int(2));
  CHECK(eig[0].space.basis()[0] == Vec{q.zero(), q.zero(), q.one()});
  CHECK(eig[1].space.basis()[0] == Vec{q.one(), q.zero(), q.zero()});

  // rotation has no rational eigenvalues
  Matrix rot = from_ints({{0, -1}, {1, 0}}, q);
  CHECK(eigenvalues_in_field(rot).empty());
}

TEST_CASE("ad(f_0) on the Witt basis over F_5 has every residue as eigenvalue") {
  LieSC w = gen_witt_lie(5);
  Field f5 = Field::prime(5);
  // oracle: brute-force brackets [f_0, f_i] = i f_i from the table itself
  for (int i = 0; i < 5; ++i) {
    Vec expected = zero_vec(5, f5);
    expected[(std::size_t)i] = f5.from_int(i - 1);  // basis index i holds f_{i-1}
    CHECK(w.bracket_basis(1, i) == expected);
  }
  auto eig = eigenvalues_in_field(w.ad_basis(1));
  REQUIRE(eig.size() == 5);
  for (std::uint64_t r = 0; r < 5; ++r) {
    CHECK(eig[r].value.residue() == r);
    CHECK(eig[r].space.dim() == 1);
  }
}

TEST_CASE("subspace sum and intersection") {
  Field f = Field::prime(5);
  Subspace u(4, f), v(4, f);
  u.insert({f.one(), f.zero(), f.zero(), f.zero()});
  u.insert({f.zero(), f.one(), f.zero(), f.zero()});
  v.insert({f.zero(), f.one(), f.zero(), f.zero()});
  v.insert({f.zero(), f.zero(), f.one(), f.zero()});
  CHECK(u.sum(v).dim() == 3);
  Subspace w = u.intersect(v);
  REQUIRE(w.dim() == 1);
  CHECK(w.basis()[0] == Vec{f.zero(), f.one(), f.zero(), f.zero()});
}

TEST_CASE("solve finds a particular solution or reports none") {
  Field q = Field::rationals();
  Matrix a = from_ints({{1, 2}, {2, 4}}, q);
  auto sol = solve(a, {q.from_int(3), q.from_int(6)});
  REQUIRE(sol.has_value());
  CHECK(a.apply(*sol) == Vec{q.from_int(3), q.from_int(6)});
  CHECK_FALSE(solve(a, {q.from_int(3), q.from_int(7)}).has_value());
}
