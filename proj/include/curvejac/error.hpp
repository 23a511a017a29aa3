#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvejac {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  DenominatorVanishes,
  OrderNonpositive,
  OrderMismatch,
  NonUnit,
  InfinityUnsupported,
  NotMonic,
  CertificateFailure,
  DegreeOne,
  InvalidSubscheme,
  InvalidConfig,
  UnknownComponent,
  UnknownSingularity,
  PositiveGenusUnsupported,
  NonUnitEntry,
  ShapeMismatch,
  PresentationMismatch,
  NonzeroDegree,
  PointNotSmooth,
  MissingBasepoint,
  SingularPoint,
  NotASite,
  InvalidProblem,
  SiteIsModifiable,
};

std::string_view to_string(ErrorCode code);

/// Every failing operation in the library throws this, tagged with the
/// contract violation that caused it.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace curvejac
