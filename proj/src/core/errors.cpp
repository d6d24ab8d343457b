#include "errors.hpp"

namespace spinx {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::InvalidSpace: return "invalid space";
    case Errc::DimensionMismatch: return "dimension mismatch";
    case Errc::SpaceMismatch: return "space mismatch";
    case Errc::UnsupportedSpace: return "unsupported space";
    case Errc::NotOrthogonal: return "not orthogonal";
    case Errc::ZeroElement: return "zero element";
    case Errc::NotPositive: return "not positive";
    case Errc::NotInCone: return "not in cone";
    case Errc::MismatchedFrame: return "mismatched frame";
    case Errc::InconsistentWithTheorem: return "inconsistent with theorem";
    case Errc::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace spinx
