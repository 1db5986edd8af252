#include "introots/integer.hpp"

#include <limits>
#include <stdexcept>

namespace introots {

Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(x);
}

Int ifourth_root(const Int& x) {
  // floor(sqrt(floor(sqrt(x)))) == floor(x^(1/4))
  return isqrt(isqrt(x));
}

Int pow2(std::uint64_t e) { return Int(1) << e; }

Int binomial(const Int& m, int k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  if (m < k) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= m - (k - i);
    r /= i;  // exact at every step
  }
  return r;
}

Int multichoose(const Int& v, int k) { return binomial(v + k - 1, k); }

bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return lo <= v && v <= hi;
}

std::optional<Int> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return std::nullopt;
  Int value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    value = value * 10 + (text[i] - '0');
  }
  if (negative) value = -value;
  return value;
}

} // namespace introots
