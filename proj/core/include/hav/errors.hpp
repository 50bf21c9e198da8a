#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hav {

enum class ErrorKind {
  NonSquarefree,
  BadAutomorphism,
  BasisNotUnimodular,
  NotGalois,
  ValuationUnavailable,
  AntisymmetryViolated,
  JacobiViolated,
  EmbeddingInvalid,
  NotACharacter,
  UnknownName,
  DegreeOutOfRange,
  ActionNotChainMap,
  NotBorelShape,
  NotSemisimple,
  NotNilpotent,
  PreconditionUnmet,
  BasisMismatch,
  DimensionMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the core library. `kind()` is the stable, machine
/// readable tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hav
