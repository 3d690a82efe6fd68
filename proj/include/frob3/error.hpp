#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frob3 {

/// Failure categories raised by the library.
enum class Errc {
  PoleAtInput,
  NonExactMatrix,
  NotUpperHalfPlane,
  CeilingExceeded,
  OutsideDomain,
  SingularMatrix,
  NotDegenerate,
  IrrationalRoot,
  SingularCurve,
  Inconsistent,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::PoleAtInput: return "PoleAtInput";
    case Errc::NonExactMatrix: return "NonExactMatrix";
    case Errc::NotUpperHalfPlane: return "NotUpperHalfPlane";
    case Errc::CeilingExceeded: return "CeilingExceeded";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::IrrationalRoot: return "IrrationalRoot";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace frob3
