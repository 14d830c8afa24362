#pragma once

#include <cstdint>

#include "hh1/field.hpp"

namespace hh1 {

// splitmix64: deterministic across platforms, one seed per consumer
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // F_p: uniform residue; Q: integer in [-bound, bound]
  FieldElem field_elem(const Field& f, long long bound = 9) {
    if (f.characteristic()) return FieldElem::mod_p(f.characteristic(), below(f.characteristic()));
    long long span = 2 * bound + 1;
    return f.from_int((long long)below((std::uint64_t)span) - bound);
  }
};

}  // namespace hh1
