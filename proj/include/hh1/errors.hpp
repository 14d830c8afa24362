#pragma once

#include <stdexcept>
#include <string>

namespace hh1 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// arithmetic on elements of two different fields
struct FieldMismatch : Error {
  FieldMismatch() : Error("field mismatch: operands belong to different fields") {}
};

struct BadField : Error {
  explicit BadField(const std::string& what) : Error("bad field: " + what) {}
};

struct NotSquare : Error {
  NotSquare() : Error("matrix is not square") {}
};

struct SubspaceNotContained : Error {
  SubspaceNotContained() : Error("subspace is not contained in the ambient space") {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("parse error at line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct InvalidRelation : Error {
  int line;
  InvalidRelation(int line_, const std::string& what)
      : Error("invalid relation at line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct EmptySubset : Error {
  EmptySubset() : Error("vertex subset must be non-empty") {}
};

struct NotADerivation : Error {
  explicit NotADerivation(const std::string& what) : Error("not a derivation: " + what) {}
};

struct HasLoops : Error {
  HasLoops() : Error("quiver has a loop; operation requires a loop-free Ext-quiver") {}
};

struct NotPrimeField : Error {
  NotPrimeField() : Error("operation requires a prime field F_p") {}
};

struct WrongCharacteristic : Error {
  explicit WrongCharacteristic(const std::string& what) : Error("wrong characteristic: " + what) {}
};

struct UnsupportedCharacteristic : Error {
  explicit UnsupportedCharacteristic(const std::string& what)
      : Error("unsupported characteristic: " + what) {}
};

}  // namespace hh1
