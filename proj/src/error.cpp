#include "tropt/error.hpp"

namespace tropt {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InversionOfZero: return "InversionOfZero";
    case Errc::UndefinedPower: return "UndefinedPower";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::AllZeroVector: return "AllZeroVector";
    case Errc::NotColumnRegular: return "NotColumnRegular";
    case Errc::NotRegularVector: return "NotRegularVector";
    case Errc::NoRegularSolution: return "NoRegularSolution";
    case Errc::ZeroSpectralRadius: return "ZeroSpectralRadius";
    case Errc::InfeasibleConstraints: return "InfeasibleConstraints";
    case Errc::DegenerateProblem: return "DegenerateProblem";
    case Errc::InvalidProblem: return "InvalidProblem";
    case Errc::SpecValidation: return "SpecValidation";
    case Errc::InfeasibleSchedule: return "InfeasibleSchedule";
    case Errc::GridTooLarge: return "GridTooLarge";
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::NoFeasiblePoint: return "NoFeasiblePoint";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_infeasibility(Errc code) noexcept {
  return code == Errc::NoRegularSolution || code == Errc::InfeasibleConstraints ||
         code == Errc::InfeasibleSchedule;
}

}  // namespace tropt
