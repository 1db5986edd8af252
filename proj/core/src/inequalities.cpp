#include "introots/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

namespace introots {
namespace {

void require_degree(const Polynomial& p, int min_degree, std::string_view check) {
  if (p.degree() < min_degree)
    throw std::invalid_argument(std::string(check) + ": degree must be >= " + std::to_string(min_degree));
}

} // namespace

bool CheckReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const CheckVerdict& v) { return v.pass; });
}

CheckReport check_newton_weak(const Polynomial& p) {
  require_degree(p, 2, kNewtonWeak);
  const auto& a = p.coefficients();
  CheckReport report;
  for (int j = 1; j <= p.degree() - 1; ++j) {
    Int lhs = a[j] * a[j];
    Int rhs = a[j - 1] * a[j + 1];
    bool pass = lhs >= rhs;
    report.verdicts.push_back({std::string(kNewtonWeak), j, pass, std::move(lhs), std::move(rhs)});
  }
  return report;
}

CheckReport check_newton_strong(const Polynomial& p) {
  require_degree(p, 3, kNewtonStrong);
  const auto& a = p.coefficients();
  CheckReport report;
  for (int j = 1; j <= p.degree() - 2; ++j) {
    Int lhs = 4 * (a[j] * a[j] - a[j - 1] * a[j + 1]) * (a[j + 1] * a[j + 1] - a[j] * a[j + 2]);
    Int rhs = a[j - 1] * a[j + 2] - a[j] * a[j + 1];
    rhs *= rhs;
    bool pass = lhs >= rhs;
    report.verdicts.push_back({std::string(kNewtonStrong), j, pass, std::move(lhs), std::move(rhs)});
  }
  return report;
}

CheckReport check_no_consecutive_zeros(const Polynomial& p) {
  require_degree(p, 2, kNoConsecutiveZeros);
  const auto& a = p.coefficients();
  CheckReport report;
  for (int i = 1; i <= p.degree() - 1; ++i) {
    bool pass = !(a[i] == 0 && a[i + 1] == 0);
    report.verdicts.push_back({std::string(kNoConsecutiveZeros), i, pass, a[i], a[i + 1]});
  }
  return report;
}

CheckReport check_zero_remark(const Polynomial& p) {
  require_degree(p, 2, kZeroRemark);
  const auto& a = p.coefficients();
  CheckReport report;
  for (int j = 1; j <= p.degree() - 1; ++j) {
    if (a[j] != 0) continue;
    Int lhs = a[j - 1] * a[j + 1];
    bool pass = lhs < 0;
    report.verdicts.push_back({std::string(kZeroRemark), j, pass, std::move(lhs), Int(0)});
  }
  return report;
}

CheckReport check_second_principle(const Polynomial& p) {
  require_degree(p, 3, kSecondPrinciple);
  const auto& a = p.coefficients();
  CheckReport report;
  for (int l = 1; l <= p.degree() - 2; ++l) {
    Int outer_lo = abs(a[l - 1]);
    Int outer_hi = abs(a[l + 2]);
    Int inner_lo = abs(a[l]);
    Int inner_hi = abs(a[l + 1]);
    Int lhs = std::min(outer_lo, outer_hi);
    Int rhs = 3 * std::max(inner_lo, inner_hi);
    bool pass = lhs <= rhs;
    report.verdicts.push_back({std::string(kSecondPrinciple), l, pass, std::move(lhs), std::move(rhs)});
  }
  return report;
}

CheckReport check_all(const Polynomial& p) {
  require_degree(p, 2, "check_all");
  CheckReport report = check_newton_weak(p);
  auto append = [&report](CheckReport more) {
    for (auto& v : more.verdicts) report.verdicts.push_back(std::move(v));
  };
  if (p.degree() >= 3) append(check_newton_strong(p));
  append(check_no_consecutive_zeros(p));
  append(check_zero_remark(p));
  if (p.degree() >= 3) append(check_second_principle(p));
  return report;
}

} // namespace introots
