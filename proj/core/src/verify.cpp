#include "introots/verify.hpp"

#include <stdexcept>

#include "introots/inequalities.hpp"

namespace introots {

SweepSummary verify_sweep(int n_max, const Int& radius, const SearchOptions& options) {
  if (n_max < 2) throw std::invalid_argument("verify_sweep: n_max must be >= 2");
  if (radius < 1) throw std::invalid_argument("verify_sweep: radius must be >= 1");

  Int space = 0;
  for (int n = 2; n <= n_max; ++n) space += multichoose(2 * radius, n);
  if (space > options.node_budget) throw BudgetError(space, options.node_budget);

  SweepSummary summary;
  summary.n_max = n_max;
  summary.radius = radius;

  auto record = [&summary](int n, const Solution& sol, std::string_view check, int index,
                           const Int& lhs, const Int& rhs) {
    ++summary.violations;
    if (!summary.first_violation)
      summary.first_violation =
          SweepViolation{n, sol.roots, sol.poly, std::string(check), index, lhs, rhs};
  };

  for (int n = 2; n <= n_max; ++n) {
    const AlphaValue a = alpha(n);
    for (const Solution& sol : brute_force_all(n, radius, options)) {
      ++summary.polynomials;
      CheckReport report = check_all(sol.poly);
      summary.verdicts += report.verdicts.size();
      for (const CheckVerdict& v : report.verdicts)
        if (!v.pass) record(n, sol, v.check, v.index, v.lhs, v.rhs);

      // alpha root bound at every pair position, compared on fourth powers
      Int mx = sol.roots.max_abs();
      Int mx4 = mx * mx;
      mx4 *= mx4;
      const auto& coeffs = sol.poly.coefficients();
      for (int j = 1; j <= n - 1; ++j) {
        Int cj = abs(coeffs[static_cast<std::size_t>(j)]);
        Int cj1 = abs(coeffs[static_cast<std::size_t>(j) + 1]);
        Int m = std::max(cj, cj1);
        Int m2 = m * m;
        Int rhs = a.pow4 * m2 * m2;
        ++summary.verdicts;
        if (mx4 > rhs) record(n, sol, kAlphaRootBound, j, mx4, rhs);
      }
    }
  }
  return summary;
}

} // namespace introots
