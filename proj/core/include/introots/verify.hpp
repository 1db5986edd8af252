#pragma once

#include <optional>
#include <string>

#include "introots/enumeration.hpp"

namespace introots {

/// One failed check found by verify_sweep, with everything needed to
/// replay it. For the root-bound check lhs/rhs are (max |root|)^4 and
/// alpha^4 M^4, since alpha^2 is not integral for odd n >= 7.
struct SweepViolation {
  int n;
  RootMultiset roots;
  Polynomial poly;
  std::string check;
  int index;
  Int lhs;
  Int rhs;
};

struct SweepSummary {
  int n_max = 0;
  Int radius;
  std::uint64_t polynomials = 0;
  std::uint64_t verdicts = 0;
  std::uint64_t violations = 0;
  std::optional<SweepViolation> first_violation;
};

inline constexpr std::string_view kAlphaRootBound = "alpha-root-bound";

/// Runs every coefficient check plus the alpha root bound (at every pair
/// position j) over all root multisets with 2..n_max entries in
/// [-radius, radius] \ {0}. Zero violations re-certifies the inequalities
/// and the bound on that range.
SweepSummary verify_sweep(int n_max, const Int& radius, const SearchOptions& options = {});

} // namespace introots
