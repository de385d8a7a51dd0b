#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diperfect {

enum class ErrorCode {
  LoopArc,
  VertexOutOfRange,
  TooLarge,
  NotStable,
  NotMaximumStable,
  NotSemicomplete,
  TransitiveTrianglePresent,
  ExceptionDigraph,
  SidesViolated,
  NotPerfect,
  NotInClassB,
  NotInClassD,
  NotUniversal,
  InsertionImpossible,
  AlphaNotAdditive,
  NotAPartition,
  NotACliqueCut,
  PreconditionViolated,
  NotACycle,
  NotSeriesParallel,
  NotInSemicomplete,
  NotStrong,
  InternalTheoremViolation,
  TooManyLonelyArcs,
  SharedEndvertex,
  UnknownClass,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the violated
/// contract; the message carries instance detail for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace diperfect
