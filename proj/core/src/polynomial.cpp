#include "introots/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace introots {

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial: empty coefficient list");
  if (coeffs_.front() != 1) throw std::invalid_argument("polynomial: leading coefficient must be 1");
}

const Polynomial& Polynomial::one() {
  static const Polynomial p{std::vector<Int>{1}};
  return p;
}

const Int& Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) throw std::out_of_range("polynomial: coefficient index");
  return coeffs_[static_cast<std::size_t>(i)];
}

Int Polynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (const Int& c : coeffs_) acc = acc * x + c;
  return acc;
}

bool coeff_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

RootMultiset::RootMultiset(std::vector<Int> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw std::invalid_argument("roots: empty multiset");
  for (const Int& r : roots_)
    if (r == 0) throw std::invalid_argument("roots: zero is not an admissible root");
  std::sort(roots_.begin(), roots_.end());
}

Int RootMultiset::max_abs() const {
  // sorted, so the extreme magnitude is at an end
  Int lo = abs(roots_.front());
  Int hi = abs(roots_.back());
  return std::max(lo, hi);
}

Polynomial from_roots(const RootMultiset& roots) {
  std::vector<Int> c{1};
  for (const Int& r : roots.values()) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] -= r * c[i - 1];
  }
  return Polynomial(std::move(c));
}

SymmetricVector symmetric_functions(const RootMultiset& roots) {
  const auto& xs = roots.values();
  std::vector<Int> s(xs.size(), 0);
  std::size_t used = 0;
  for (const Int& x : xs) {
    ++used;
    for (std::size_t j = used; j >= 2; --j) s[j - 1] += x * s[j - 2];
    s[0] += x;
  }
  return {std::move(s)};
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return Polynomial(std::move(c));
}

Polynomial multiplier_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("multiplier_polynomial: m must be >= 1");
  static const Polynomial x_plus_1{std::vector<Int>{1, 1}};
  static const Polynomial x2_minus_1{std::vector<Int>{1, 0, -1}};
  Polynomial f = (m % 2 != 0) ? x_plus_1 : Polynomial::one();
  for (int i = 0; i < m / 2; ++i) f = multiply(f, x2_minus_1);
  return f;
}

Polynomial family_polynomial(const std::vector<Int>& rs) {
  if (rs.empty()) throw std::invalid_argument("family_polynomial: empty factor list");
  Polynomial f = Polynomial::one();
  for (const Int& r : rs) {
    if (r == 0) throw std::invalid_argument("family_polynomial: zero entry");
    f = multiply(f, Polynomial{std::vector<Int>{1, 0, -(r * r)}});
  }
  return f;
}

Polynomial sign_flip(const Polynomial& p) {
  std::vector<Int> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

} // namespace introots
