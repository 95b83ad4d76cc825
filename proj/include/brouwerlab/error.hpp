#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brouwerlab {

enum class ErrorKind {
  NotSquare,
  NotReflexive,
  NotTransitive,
  NotAntisymmetric,
  NoLub,
  NoBottom,
  BadJoin,
  NoLeastResidual,
  CapExceeded,
  UnknownName,
  HostMismatch,
  BottomTop,
  PreconditionFailed,
  NotAUslHom,
  SyntaxError,
  UnassignedAtom,
  NotAPMorphism,
  NotOnto,
  NotDownwardClosed,
  PreconditionViolated,
  InvalidAlgebra,
  BadInput,
};

std::string_view to_string(ErrorKind kind);

/// Library error. `witness` carries the indices that exhibit the failure,
/// e.g. (i, j, k) for NotTransitive or (position) for SyntaxError.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::int64_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::int64_t> witness_;
};

}  // namespace brouwerlab
