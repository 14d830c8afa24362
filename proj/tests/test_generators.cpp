#include <doctest.h>

#include "hh1/derivations.hpp"
#include "hh1/generators.hpp"

using namespace hh1;

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(gen_trunc_poly(1), Error);
  CHECK_THROWS_AS(gen_nakayama(0, 3), Error);
  CHECK_THROWS_AS(gen_nakayama(2, 1), Error);
  CHECK_THROWS_AS(gen_rad_square_zero(2, {{0, 0}}), Error);          // loop
  CHECK_THROWS_AS(gen_rad_square_zero(2, {{0, 1}, {0, 1}}), Error);  // repeated edge
  CHECK_THROWS_AS(gen_witt_lie(4), Error);
  CHECK_THROWS_AS(gen_witt_lie(2), Error);
}

TEST_CASE("nakayama with one vertex is the truncated polynomial algebra") {
  CHECK(gen_nakayama(1, 6) == gen_trunc_poly(6));
}

TEST_CASE("every generator output round-trips byte-identically") {
  std::vector<std::string> files = {
      gen_kronecker(),
      gen_kronecker(Field::prime(2)),
      gen_trunc_poly(2),
      gen_trunc_poly(7, Field::prime(7)),
      gen_nakayama(2, 3),
      gen_nakayama(3, 5, Field::prime(5)),
      gen_rad_square_zero(4, {{0, 1}, {0, 2}, {0, 3}}),
  };
  for (const auto& text : files) CHECK(emit_presentation(parse_presentation(text)) == text);
}

TEST_CASE("witt structure constants match the derivation-matrix oracle") {
  LieSC w = gen_witt_lie(5);
  Field f5 = Field::prime(5);
  // [f_{-1}, f_1] = 2 f_0
  Vec expect = zero_vec(5, f5);
  expect[1] = f5.from_int(2);
  CHECK(w.bracket_basis(0, 2) == expect);

  // oracle: rebuild the matrices f_i(x^m) = m x^{m+i} and compare every
  // bracket against the table through the matrix commutator
  std::vector<Matrix> fm;
  for (int i = -1; i <= 3; ++i) {
    Matrix m(5, 5, f5);
    for (int deg = 1; deg < 5; ++deg)
      if (deg + i >= 0 && deg + i < 5)
        m.at((std::size_t)(deg + i), (std::size_t)deg) = f5.from_int(deg);
    fm.push_back(std::move(m));
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Matrix oracle = kernels::commutator(fm[(std::size_t)i], fm[(std::size_t)j]);
      Matrix from_table(5, 5, f5);
      for (int k = 0; k < 5; ++k) {
        const FieldElem& c = w.bracket_basis(i, j)[(std::size_t)k];
        if (c.is_zero()) continue;
        for (std::size_t r = 0; r < 5; ++r)
          for (std::size_t s = 0; s < 5; ++s)
            from_table.at(r, s) += c * fm[(std::size_t)k].at(r, s);
      }
      CHECK(oracle == from_table);
    }
}

TEST_CASE("witt algebras validate for a range of primes") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    LieSC w = gen_witt_lie(p);  // construction runs the Jacobi check
    CHECK(w.dim() == (int)p);
  }
}

TEST_CASE("gen_witt_lie(3) is recognized as sl2") {
  CHECK(recognize_sl2(gen_witt_lie(3), 0).verdict == Recognition::Yes);
}

TEST_CASE("HH1 of k[x]/(x^p) over F_p is Lie-isomorphic to the Witt algebra") {
  for (std::uint64_t p : {3ULL, 5ULL}) {
    auto pres = parse_presentation(gen_trunc_poly((int)p, Field::prime(p)));
    HH1Algebra h = hh1_of(FdAlgebra::build(pres));
    CHECK(h.dim() == (int)p);
    CHECK(recognize_witt(h.lie(), 0).verdict == Recognition::Yes);
  }
}

TEST_CASE("kronecker generator facts") {
  auto pres = parse_presentation(gen_kronecker());
  FdAlgebra a = FdAlgebra::build(pres);
  CHECK(a.dim() == 4);
  auto qc = a.quiver_class();
  CHECK(qc.max_parallel == 2);
  CHECK_FALSE(qc.has_loops);
  // over F_2 the first cohomology is solvable
  auto pres2 = parse_presentation(gen_kronecker(Field::prime(2)));
  HH1Algebra h2 = hh1_of(FdAlgebra::build(pres2));
  CHECK(series_report(h2.lie()).solvable);
}

TEST_CASE("nakayama generator facts") {
  FdAlgebra n = FdAlgebra::build(parse_presentation(gen_nakayama(2, 3)));
  CHECK(n.dim() == 6);
  CHECK(n.loewy_length() == 3);
  CHECK(n.quiver_class().is_simple_digraph);
}
