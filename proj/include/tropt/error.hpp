#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropt {

enum class Errc {
  InversionOfZero,
  UndefinedPower,
  ShapeMismatch,
  NotSquare,
  IndexOutOfRange,
  AllZeroVector,
  NotColumnRegular,
  NotRegularVector,
  NoRegularSolution,
  ZeroSpectralRadius,
  InfeasibleConstraints,
  DegenerateProblem,
  InvalidProblem,
  SpecValidation,
  InfeasibleSchedule,
  GridTooLarge,
  InvalidGrid,
  NoFeasiblePoint,
  TooLarge,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// True for the codes that signal an empty feasible set rather than bad input.
bool is_infeasibility(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tropt
