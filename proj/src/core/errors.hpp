#pragma once

#include <stdexcept>
#include <string>

namespace spinx {

enum class Errc {
  InvalidArgument,
  InvalidSpace,
  DimensionMismatch,
  SpaceMismatch,
  UnsupportedSpace,
  NotOrthogonal,
  ZeroElement,
  NotPositive,
  NotInCone,
  MismatchedFrame,
  InconsistentWithTheorem,
  Parse,
};

const char* to_string(Errc code) noexcept;

// All library failures surface as this type; the C layer maps code() onto
// spinx_status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace spinx
