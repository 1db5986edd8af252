#pragma once

#include "introots/integer.hpp"

namespace introots {

/// Counts binary strings of length n that contain "11" or end in '1'.
/// Read as patterns of known coefficient positions, these are exactly the
/// patterns with two adjacent known positions or a known last position —
/// the ones that pin down finitely many integer-rooted monic polynomials.
/// (That reading is interpretation, not asserted by any computation here.)
struct ChainCount {
  int n;
  Int good;
  Int total;  // 2^n
};

/// Exact count via the automaton with states (last symbol, "11" seen),
/// in pure integer arithmetic. Rejects n < 2.
ChainCount chain_count_exact(int n);

/// The golden-ratio closed form
///   2^n - (1/2 + 3 sqrt(5)/10) phi^(n-1) + (-1/2 + 3 sqrt(5)/10) psi^(n-1)
/// with phi = (1+sqrt(5))/2, psi = (1-sqrt(5))/2, evaluated in double
/// precision and rounded to the nearest integer. Exists as a cross-check;
/// the exact count is authoritative. Rejects n < 2; range error once 2^n
/// leaves double range.
struct ClosedChainCount {
  double approx;
  Int rounded;
};
ClosedChainCount chain_count_closed(int n);

/// Literal scan of all 2^n strings; rejects n outside [2, 22].
Int chain_brute_force(int n);

/// good/total as a double, for reporting.
double chain_ratio(const ChainCount& c);

} // namespace introots
