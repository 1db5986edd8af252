#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "introots/polynomial.hpp"

namespace introots {

inline constexpr std::string_view kNewtonWeak = "newton-weak";
inline constexpr std::string_view kNewtonStrong = "newton-strong";
inline constexpr std::string_view kNoConsecutiveZeros = "no-consecutive-zeros";
inline constexpr std::string_view kZeroRemark = "zero-remark";
inline constexpr std::string_view kSecondPrinciple = "second-principle";

/// One evaluated instance of a coefficient check. Both exact side values are
/// kept so a failure is reproducible from the report alone.
struct CheckVerdict {
  std::string check;
  int index;  // j, l, or i per the check's own indexing
  bool pass;
  Int lhs;
  Int rhs;
};

/// Failure is data, not an error: a report never throws on a failing
/// inequality. Errors are reserved for malformed input (degree too small).
struct CheckReport {
  std::vector<CheckVerdict> verdicts;
  bool all_pass() const;
};

/// a_j^2 >= a_{j-1} a_{j+1} for each j in 1..n-1. Rejects degree < 2.
CheckReport check_newton_weak(const Polynomial& p);

/// 4 (a_j^2 - a_{j-1}a_{j+1}) (a_{j+1}^2 - a_j a_{j+2})
///   >= (a_{j-1}a_{j+2} - a_j a_{j+1})^2 for each j in 1..n-2.
/// Rejects degree < 3.
CheckReport check_newton_strong(const Polynomial& p);

/// No i in 1..n-1 with a_i = a_{i+1} = 0. Rejects degree < 2.
CheckReport check_no_consecutive_zeros(const Polynomial& p);

/// For each interior zero a_j = 0 (j in 1..n-1): a_{j-1} a_{j+1} < 0.
/// Vacuous pass (empty report) when there is no interior zero.
CheckReport check_zero_remark(const Polynomial& p);

/// min(|a_{l-1}|, |a_{l+2}|) <= 3 max(|a_l|, |a_{l+1}|) for l in 1..n-2.
/// Rejects degree < 3.
CheckReport check_second_principle(const Polynomial& p);

/// Every check the degree admits, concatenated into one report. The checks
/// are necessary conditions for having only nonzero integer roots; a failure
/// certifies non-membership, a pass proves nothing.
CheckReport check_all(const Polynomial& p);

} // namespace introots
