#pragma once

#include <vector>

#include "introots/integer.hpp"

namespace introots {

/// Monic polynomial with exact integer coefficients, stored leading-first:
/// coeffs[i] is a_i in x^n + a_1 x^(n-1) + ... + a_n, and a_0 == 1 always.
class Polynomial {
 public:
  /// Takes [a_0, ..., a_n]; rejects an empty list and a_0 != 1.
  explicit Polynomial(std::vector<Int> coeffs);

  /// The degree-0 polynomial 1 (multiplicative identity).
  static const Polynomial& one();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  const Int& coefficient(int i) const;

  /// Exact evaluation, nested multiply-add from the leading coefficient.
  Int operator()(const Int& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Int> coeffs_;
};

/// Order by degree, then lexicographically by coefficient sequence.
bool coeff_less(const Polynomial& a, const Polynomial& b);

/// Multiset of nonzero integers, kept sorted nondecreasing.
class RootMultiset {
 public:
  /// Sorts the input; rejects an empty list and any zero entry.
  explicit RootMultiset(std::vector<Int> roots);

  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Int>& values() const { return roots_; }
  Int max_abs() const;

  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

 private:
  std::vector<Int> roots_;
};

/// [s_1, ..., s_n]: s_j is the j-th elementary symmetric function of the
/// roots, so that a_j = (-1)^j s_j for the polynomial with those roots.
struct SymmetricVector {
  std::vector<Int> s;
};

/// prod (x - x_i), built by iterated exact multiplication by (x - x_i).
Polynomial from_roots(const RootMultiset& roots);

SymmetricVector symmetric_functions(const RootMultiset& roots);

/// Exact coefficient convolution; both inputs monic, result monic.
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// f_m: (x+1)(x^2-1)^((m-1)/2) for odd m, (x^2-1)^(m/2) for even m.
/// Degree m, every root is +1 or -1, coefficient L1 norm 2^floor((m+1)/2),
/// constant term +-1. Rejects m < 1.
Polynomial multiplier_polynomial(int m);

/// prod_j (x^2 - r_j^2): degree 2|rs|, roots {+-r_j}, every odd-index
/// coefficient zero. Rejects an empty list and zero entries.
Polynomial family_polynomial(const std::vector<Int>& rs);

/// (-1)^n p(-x): negates every root, i.e. a_i -> (-1)^i a_i. Involution.
Polynomial sign_flip(const Polynomial& p);

} // namespace introots
