#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

// Named failure modes shared by every module. The CLI maps these onto exit
// codes, so adding one means touching exit_code_for() as well.
enum class ErrorCode {
  ParseError,
  UnknownVariable,
  ZeroDenominator,
  VariableMismatch,
  NotHomogeneous,
  NotUnivariate,
  ConstantInVariable,
  InexactDivision,
  NotSmooth,
  AxisOnCurve,
  DimensionMismatch,
  InvalidComplex,
  NonzeroComposition,
  InvalidCellCounts,
  InvalidProfile,
  NonIntegerGenus,
  NegativeGenus,
  InvalidArgument,
  BoundViolated,
  ZeroT,
  DegenerateParameters,
  InvariantBreach,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when an internal cross-check fails (e.g. two routes to the genus
// disagree). Never expected on valid input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::InvariantBreach, what);
}

}  // namespace lefschetz
