#pragma once

#include <string>
#include <vector>

#include "hh1/field.hpp"

namespace hh1 {

struct Arrow {
  std::string name;
  int source;
  int target;
};

// finite directed multigraph; arrow names unique, endpoints in range
struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  int arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return (int)i;
    return -1;
  }
};

// one term of a relation: coefficient times a composable arrow path
struct PathTerm {
  FieldElem coeff;
  std::vector<int> arrows;  // arrow indices, composed left to right
};

// formal k-linear combination of paths (empty arrow list = trivial path e_v)
struct PathVector {
  std::vector<PathTerm> terms;
};

struct BoundQuiverPresentation {
  std::string name;  // optional; from a leading '# <name>' comment
  Field field = Field::rationals();
  Quiver quiver;
  int truncation = 2;  // N >= 2; paths of length >= N are zero
  std::vector<PathVector> relations;
};

// Parses the line-oriented presentation format:
//   field Q | field F <p>
//   vertices <n>
//   arrow <name> <src> <dst>
//   truncate <N>
//   rel <coeff> <path> [<coeff> <path>]...
// '#' starts a comment; a leading '# <name>' is kept as the presentation name.
// Throws ParseError / InvalidRelation / BadField.
BoundQuiverPresentation parse_presentation(const std::string& text);

// canonical re-emission; parse(emit(p)) re-emits byte-identically
std::string emit_presentation(const BoundQuiverPresentation& p);

// same presentation over another field, coefficients re-reduced;
// this changes the algebra, not just the scalars
BoundQuiverPresentation with_field(const BoundQuiverPresentation& p, const Field& f);

}  // namespace hh1
