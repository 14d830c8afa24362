#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hh1/lie.hpp"
#include "hh1/presentation.hpp"

namespace hh1 {

// Canonical presentation files for the built-in families. Every generator's
// output round-trips through parse_presentation + emit_presentation
// byte-identically.

// 2 vertices, parallel arrows a, b : 0 -> 1, truncate 2
std::string gen_kronecker(const Field& f = Field::rationals());

// 1 vertex, loop x, truncate n (k[x]/(x^n)); n >= 2
std::string gen_trunc_poly(int n, const Field& f = Field::rationals());

// cyclic quiver on e vertices, arrows a<i> : i -> i+1 mod e, truncate L;
// gen_nakayama(1, L) is gen_trunc_poly(L)
std::string gen_nakayama(int e, int L, const Field& f = Field::rationals());

// one arrow per edge of a loop-free simple digraph, truncate 2
std::string gen_rad_square_zero(int vertices, const std::vector<std::pair<int, int>>& edges,
                                const Field& f = Field::rationals());

// The Witt algebra W = Der(k[x]/(x^p)) over F_p as structure constants,
// computed from the derivation matrices f_i : x -> x^{i+1} (not hard-coded).
LieSC gen_witt_lie(std::uint64_t p);

}  // namespace hh1
