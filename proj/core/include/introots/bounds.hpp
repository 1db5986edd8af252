#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "introots/integer.hpp"

namespace introots {

/// The root-bound constant for a prescribed pair of consecutive
/// coefficients both bounded by M in absolute value:
///   alpha(2) = 1, alpha(3) = sqrt(2), alpha(4) = 3 sqrt(2),
///   alpha(5) = 15 sqrt(2), alpha(n) = 2^((n^2 + 2n - 18)/4) for n >= 6.
/// alpha^4 is an exact integer for every n; alpha^2 is integral except for
/// odd n >= 7, so exact comparisons run on fourth powers.
struct AlphaValue {
  int n;
  Int pow4;                    // alpha^4
  std::optional<Int> squared;  // alpha^2 when integral
};

/// Rejects n < 2. Memory grows like 2^(n^2/4); fine for n in the hundreds.
AlphaValue alpha(int n);

/// k(t): the bound factor valid across a chain of t consecutive
/// coefficients. k(2) = 1, k(3) = 3, k(4) = 15, and for t >= 5 the product
/// form 15 * prod_{j=2}^{t-3} (4 * 2^floor((j+1)/2) - 1). k(4) = 15 is
/// stored as given data: the bare recursion from k(3) only yields 21.
struct ChainBound {
  int t;
  Int value;
};
ChainBound k_product(int t);

/// Closed-form upper bound 2^e with e = ((t+1)^2 + 2(t+1) - 20)/4, t >= 5.
/// 4e is always integral; e itself is integral exactly when t is odd. The
/// fourth power 2^(4e) is exact for every t and is the comparison handle.
struct ClosedChainBound {
  int t;
  std::int64_t exponent4;   // 4e
  Int pow4;                 // 2^(4e)
  std::optional<Int> value; // 2^e when e is integral (odd t)
};
ClosedChainBound k_closed(int t);

enum class BoundMethod { constant_term, sum_of_squares, alpha };
std::string_view method_name(BoundMethod m);

/// A certified search radius: every admissible root satisfies |x| <= radius.
/// An absent radius means the constraint admits no such polynomial at all.
struct BoundCertificate {
  BoundMethod method;
  std::optional<Int> radius;
  std::optional<Int> alpha_squared;  // echo, alpha method only, when integral
  std::vector<std::pair<std::string, Int>> inputs;  // echo of the data used
};

/// radius = floor(alpha(n) * M), computed exactly on fourth powers:
/// the largest r >= 0 with r^4 <= alpha^4 M^4. Rejects n < 2 and M < 0.
BoundCertificate root_bound_alpha(int n, const Int& M);

/// a_1^2 - 2 a_2 equals the sum of the squared roots; radius =
/// floor(sqrt(a_1^2 - 2 a_2)), infeasible when that quantity is negative.
BoundCertificate root_bound_first_principle(const Int& a1, const Int& a2);

/// radius = |a_n|. Rejects a_n = 0: n nonzero integer roots force a
/// nonzero constant term, so such input cannot come from this family.
BoundCertificate root_bound_constant_term(const Int& an);

} // namespace introots
