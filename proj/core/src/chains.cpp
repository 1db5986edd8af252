#include "introots/chains.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace introots {

ChainCount chain_count_exact(int n) {
  if (n < 2) throw std::invalid_argument("chain_count_exact: n must be >= 2");
  // counts by state after m symbols: ends in 0 / ends in 1 (no "11" yet),
  // or "11" already seen
  Int end0 = 1, end1 = 1, seen = 0;
  for (int m = 2; m <= n; ++m) {
    Int next0 = end0 + end1;
    Int next1 = end0;
    seen = 2 * seen + end1;
    end0 = std::move(next0);
    end1 = std::move(next1);
  }
  Int good = seen + end1;
  return {n, std::move(good), pow2(static_cast<std::uint64_t>(n))};
}

ClosedChainCount chain_count_closed(int n) {
  if (n < 2) throw std::invalid_argument("chain_count_closed: n must be >= 2");
  if (n > 1023) throw std::range_error("chain_count_closed: 2^n exceeds double range; use chain_count_exact");
  const double s5 = std::sqrt(5.0);
  const double phi = (1.0 + s5) / 2.0;
  const double psi = (1.0 - s5) / 2.0;
  const double approx = std::ldexp(1.0, n) - (0.5 + 3.0 * s5 / 10.0) * std::pow(phi, n - 1) +
                        (-0.5 + 3.0 * s5 / 10.0) * std::pow(psi, n - 1);
  return {approx, Int(std::round(approx))};
}

Int chain_brute_force(int n) {
  if (n < 2 || n > 22) throw std::invalid_argument("chain_brute_force: n must be in [2, 22]");
  std::uint64_t good = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < limit; ++v) {
    // bit 0 is the last character, so "ends with 1" is v & 1
    if ((v & (v >> 1)) != 0 || (v & 1) != 0) ++good;
  }
  return Int(good);
}

double chain_ratio(const ChainCount& c) {
  // scale both to at most 64 significant bits before converting
  const unsigned bits = c.total > 0 ? static_cast<unsigned>(boost::multiprecision::msb(c.total)) + 1 : 1;
  const unsigned shift = bits > 64 ? bits - 64 : 0;
  const Int num = c.good >> shift;
  const Int den = c.total >> shift;
  return num.convert_to<double>() / den.convert_to<double>();
}

} // namespace introots
