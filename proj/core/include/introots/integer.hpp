#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/literals.hpp>

namespace introots {

// Exact arbitrary-precision integer. Coefficients of a degree-n polynomial
// with root radius B grow like B^n, which overflows fixed-width integers
// even at desk scale, so every arithmetic path in this library uses Int.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(sqrt(x)); rejects x < 0.
Int isqrt(const Int& x);

/// floor(x^(1/4)); rejects x < 0.
Int ifourth_root(const Int& x);

/// 2^e as an exact integer.
Int pow2(std::uint64_t e);

/// Binomial coefficient C(m, k) for k >= 0, exact.
Int binomial(const Int& m, int k);

/// Number of nondecreasing k-tuples drawn from v values: C(v + k - 1, k).
Int multichoose(const Int& v, int k);

bool fits_int64(const Int& v);

/// Strict base-10 parse: optional sign followed by one or more digits.
std::optional<Int> parse_int(std::string_view text);

} // namespace introots
