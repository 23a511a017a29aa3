#include "curvejac/error.hpp"

namespace curvejac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::OrderNonpositive: return "OrderNonpositive";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::InfinityUnsupported: return "InfinityUnsupported";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::DegreeOne: return "DegreeOne";
    case ErrorCode::InvalidSubscheme: return "InvalidSubscheme";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::UnknownSingularity: return "UnknownSingularity";
    case ErrorCode::PositiveGenusUnsupported: return "PositiveGenusUnsupported";
    case ErrorCode::NonUnitEntry: return "NonUnitEntry";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::NonzeroDegree: return "NonzeroDegree";
    case ErrorCode::PointNotSmooth: return "PointNotSmooth";
    case ErrorCode::MissingBasepoint: return "MissingBasepoint";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NotASite: return "NotASite";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::SiteIsModifiable: return "SiteIsModifiable";
  }
  return "Unknown";
}

}  // namespace curvejac
