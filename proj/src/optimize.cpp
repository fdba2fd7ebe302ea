#include "tropt/optimize.hpp"

#include <array>
#include <utility>

namespace tropt {

namespace {

constexpr std::array<std::pair<ProblemKind, std::string_view>, 6> kKinds{{
    {ProblemKind::Basic, "basic"},
    {ProblemKind::ExtendedUnconstrained, "extended"},
    {ProblemKind::LinearConstrained, "linear-constrained"},
    {ProblemKind::General, "general"},
    {ProblemKind::BoxConstrained, "box"},
    {ProblemKind::FixpointConstrained, "fixpoint"},
}};

}  // namespace

std::string_view kind_name(ProblemKind kind) noexcept {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "unknown";
}

ProblemKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKinds) {
    if (n == name) return k;
  }
  std::string known;
  for (const auto& [k, n] : kKinds) known += (known.empty() ? "" : ", ") + std::string(n);
  throw Error(Errc::InvalidProblem, "unknown kind '" + std::string(name) + "' (expected one of " + known + ")");
}

std::string_view verify_status_name(VerifyStatus s) noexcept {
  switch (s) {
    case VerifyStatus::Ok: return "ok";
    case VerifyStatus::ShapeMismatch: return "shape-mismatch";
    case VerifyStatus::NotRegular: return "not-regular";
    case VerifyStatus::ConstraintViolated: return "constraint-violated";
    case VerifyStatus::ObjectiveMismatch: return "objective-mismatch";
    case VerifyStatus::NotInSolutionSet: return "not-in-solution-set";
  }
  return "unknown";
}

}  // namespace tropt
