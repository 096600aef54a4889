#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercurv {

enum class ErrorCode {
  // hypergraph
  EmptyInput,
  LoopFound,
  DuplicateHyperedge,
  NotSimple,
  NotConnected,
  UnknownVertex,
  BadParams,
  InvalidHypergraph,
  // measures
  AlphaOutOfRange,
  InvalidMeasure,
  ParseError,
  SupportOutsideVertexSet,
  SupportOutsideEdge,
  // concave cost
  LambdaOutOfRange,
  InvalidCost,
  InfiniteDerivativeAtZero,
  // transport
  StepLeavesHyperedge,
  NegativeIntermediateMass,
  EndpointMismatch,
  InvalidPlan,
  NotAssociated,
  InfeasibleQuantization,
  StateBudgetExceeded,
  // curvature / bounds
  SameVertex,
  NoStabilization,
  OutOfCatalogRange,
  PairTooClose,
  NonpositiveKappa,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type; the
/// code is stable and machine readable, the message names the offending
/// input (line, vertex, step).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypercurv
