#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "introots/bounds.hpp"
#include "introots/polynomial.hpp"

namespace introots {

/// Prescribes coeffs[j] = aj and coeffs[j+1] = aj1 on monic degree-n
/// polynomials with nonzero integer roots; 1 <= j <= n-1.
struct PairConstraint {
  int n;
  int j;
  Int aj;
  Int aj1;
};

enum class EnumerationStatus { complete, infeasible_by_lemma2, infeasible_by_bound };
std::string_view status_name(EnumerationStatus s);

struct Solution {
  RootMultiset roots;
  Polynomial poly;
};

/// status == complete means solutions is the full list within radius_used,
/// and radius_used certifies that no solution exists outside it.
struct EnumerationResult {
  EnumerationStatus status;
  BoundCertificate radius_used;
  std::uint64_t nodes_visited = 0;
  std::vector<Solution> solutions;  // sorted by coefficient sequence
};

struct SearchOptions {
  /// Searches whose size would exceed this are refused up front.
  std::uint64_t node_budget = 100'000'000;
  /// Root-sequence DFS partitions by first root value across this many
  /// workers; the result is byte-identical for any thread count.
  int threads = 1;
};

/// A search would exceed the configured node budget. Raised before any
/// partial work is returned: never a silent truncation.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(Int estimated_nodes, std::uint64_t limit);
  const Int estimated_nodes;
  const std::uint64_t limit;
};

/// Every monic degree-n polynomial with nonzero integer roots matching the
/// constraint. Both prescribed values zero is infeasible outright (no such
/// polynomial has two adjacent zero coefficients). Otherwise the search
/// radius is the minimum over every certified bound that applies: the alpha
/// bound always, the sum-of-squares bound when j = 1, and the |a_n| bound
/// when j+1 = n (ties prefer constant-term, then sum-of-squares, then
/// alpha). The search itself is a DFS over nondecreasing root sequences
/// with entries in [-radius, radius] \ {0}, maintaining the coefficient
/// sequence of the prefix product incrementally; a leaf is accepted exactly
/// when both prescribed coefficients match. No mid-branch pruning is
/// attempted: partial symmetric functions do not bound final ones
/// monotonically, so the node budget guards runaway cases instead. That
/// also makes the node count of a search exact and known in advance.
/// TODO: prune on partial-coefficient intervals once a monotone envelope
/// for the remaining depth is worked out; this is the main cost surface.
EnumerationResult enumerate_pair(const PairConstraint& c, const SearchOptions& options = {});

/// Same solution set for j = n-1, computed by a different algorithm:
/// iterate over factorizations of the constant term (times (-1)^n) into n
/// nonzero integer factors, nondecreasing, instead of a radius-bounded
/// scan. Rejects j != n-1; aj1 = 0 is infeasible (the product of nonzero
/// roots is nonzero).
EnumerationResult enumerate_last_pair(const PairConstraint& c, const SearchOptions& options = {});

/// Every multiset of n nonzero integers in [-radius, radius] paired with
/// its polynomial, in nondecreasing root-sequence order. The space size
/// multichoose(2 radius, n) must fit the node budget.
std::vector<Solution> brute_force_all(int n, const Int& radius, const SearchOptions& options = {});

/// Leaderboard probing how sharp the alpha bound is: the top_k multisets in
/// the brute-force space by exact (max |root|)^2 / max(|a_j|, |a_{j+1}|)^2,
/// ties broken by coefficient order.
struct TightnessEntry {
  RootMultiset roots;
  Polynomial poly;
  Rational ratio_squared;
};
std::vector<TightnessEntry> tightness_search(int n, int j, const Int& radius, int top_k = 10,
                                             const SearchOptions& options = {});

} // namespace introots
