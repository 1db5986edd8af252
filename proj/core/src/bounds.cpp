#include "introots/bounds.hpp"

#include <stdexcept>

namespace introots {

AlphaValue alpha(int n) {
  if (n < 2) throw std::invalid_argument("alpha: n must be >= 2");
  switch (n) {
    case 2: return {n, Int(1), Int(1)};
    case 3: return {n, Int(4), Int(2)};
    case 4: return {n, Int(324), Int(18)};        // (3 sqrt(2))^4, ^2
    case 5: return {n, Int(202500), Int(450)};    // (15 sqrt(2))^4, ^2
    default: break;
  }
  const std::int64_t e = static_cast<std::int64_t>(n) * n + 2LL * n - 18;  // 4 * log2(alpha)
  AlphaValue a{n, pow2(static_cast<std::uint64_t>(e)), std::nullopt};
  if (e % 2 == 0) a.squared = pow2(static_cast<std::uint64_t>(e / 2));
  return a;
}

ChainBound k_product(int t) {
  if (t < 2) throw std::invalid_argument("k_product: t must be >= 2");
  if (t == 2) return {t, Int(1)};
  if (t == 3) return {t, Int(3)};
  Int value = 15;
  for (int j = 2; j <= t - 3; ++j) value *= (Int(4) << ((j + 1) / 2)) - 1;
  return {t, value};
}

ClosedChainBound k_closed(int t) {
  if (t < 5) throw std::invalid_argument("k_closed: t must be >= 5");
  const std::int64_t e4 = (t + 1LL) * (t + 1) + 2LL * (t + 1) - 20;
  ClosedChainBound b{t, e4, pow2(static_cast<std::uint64_t>(e4)), std::nullopt};
  if (e4 % 4 == 0) b.value = pow2(static_cast<std::uint64_t>(e4 / 4));
  return b;
}

std::string_view method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::constant_term: return "constant-term";
    case BoundMethod::sum_of_squares: return "sum-of-squares";
    case BoundMethod::alpha: return "alpha";
  }
  return "unknown";
}

BoundCertificate root_bound_alpha(int n, const Int& M) {
  if (M < 0) throw std::invalid_argument("root_bound_alpha: M must be >= 0");
  AlphaValue a = alpha(n);
  Int m2 = M * M;
  Int radius = ifourth_root(a.pow4 * m2 * m2);
  return {BoundMethod::alpha, std::move(radius), std::move(a.squared), {{"n", Int(n)}, {"M", M}}};
}

BoundCertificate root_bound_first_principle(const Int& a1, const Int& a2) {
  Int sum_of_squares = a1 * a1 - 2 * a2;
  BoundCertificate cert{BoundMethod::sum_of_squares,
                        std::nullopt,
                        std::nullopt,
                        {{"a1", a1}, {"a2", a2}, {"sum_of_squares", sum_of_squares}}};
  if (sum_of_squares >= 0) cert.radius = isqrt(sum_of_squares);
  return cert;
}

BoundCertificate root_bound_constant_term(const Int& an) {
  if (an == 0)
    throw std::invalid_argument("root_bound_constant_term: a_n = 0 is impossible with nonzero roots");
  return {BoundMethod::constant_term, abs(an), std::nullopt, {{"an", an}}};
}

} // namespace introots
