#include "brouwerlab/error.hpp"

namespace brouwerlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NoLub: return "NoLub";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::BadJoin: return "BadJoin";
    case ErrorKind::NoLeastResidual: return "NoLeastResidual";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::BottomTop: return "BottomTop";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotAUslHom: return "NotAUslHom";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnassignedAtom: return "UnassignedAtom";
    case ErrorKind::NotAPMorphism: return "NotAPMorphism";
    case ErrorKind::NotOnto: return "NotOnto";
    case ErrorKind::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace brouwerlab
