#include "contri/error.hpp"

namespace contri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::MixedDimension: return "MixedDimension";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotSurface: return "NotSurface";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::NotManifoldWithBoundary: return "NotManifoldWithBoundary";
    case ErrorCode::NotAClosedPath: return "NotAClosedPath";
    case ErrorCode::TorsionUnsupported: return "TorsionUnsupported";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::InvalidDiagonalPair: return "InvalidDiagonalPair";
    case ErrorCode::InconsistentGluing: return "InconsistentGluing";
    case ErrorCode::QuotientNotSimplicial: return "QuotientNotSimplicial";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadGluingMap: return "BadGluingMap";
    case ErrorCode::FacetCollapse: return "FacetCollapse";
    case ErrorCode::FacetCollision: return "FacetCollision";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace contri
