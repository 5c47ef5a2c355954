#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace contri {

enum class ErrorCode {
  EmptyInput,
  DuplicateVertexInFacet,
  MixedDimension,
  UnknownVertex,
  NotPure,
  NotSurface,
  DimensionUnsupported,
  NotManifoldWithBoundary,
  NotAClosedPath,
  TorsionUnsupported,
  Disconnected,
  BadIndex,
  BadParameter,
  InvalidDiagonalPair,
  InconsistentGluing,
  QuotientNotSimplicial,
  NotAFacet,
  DimensionMismatch,
  BadGluingMap,
  FacetCollapse,
  FacetCollision,
  TooLarge,
  MissingCoordinates,
  NotOnSphere,
  BasisMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace contri
