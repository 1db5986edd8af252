#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "introots/polynomial.hpp"
#include "oracles.hpp"

using introots::Int;
using introots::Polynomial;
using introots::RootMultiset;

namespace {

std::vector<Int> coeffs(std::initializer_list<long long> values) {
  std::vector<Int> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

RootMultiset roots(std::initializer_list<long long> values) {
  std::vector<Int> out;
  for (long long v : values) out.emplace_back(v);
  return RootMultiset(std::move(out));
}

std::vector<Int> random_roots(std::mt19937_64& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<int> value_dist(-9, 9);
  std::vector<Int> out(static_cast<std::size_t>(size_dist(rng)));
  for (auto& r : out) {
    int v = 0;
    while (v == 0) v = value_dist(rng);
    r = v;
  }
  return out;
}

} // namespace

TEST_CASE("polynomial constructor enforces the monic invariant") {
  CHECK_THROWS_AS(Polynomial(std::vector<Int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial(coeffs({2, 1})), std::invalid_argument);
  CHECK(Polynomial::one().degree() == 0);
  CHECK(Polynomial(coeffs({1, 5, 0, 0, 3})).degree() == 4);
}

TEST_CASE("root multisets are sorted, nonzero, nonempty") {
  CHECK_THROWS_AS(RootMultiset(std::vector<Int>{}), std::invalid_argument);
  CHECK_THROWS_AS(roots({1, 0, 2}), std::invalid_argument);
  RootMultiset r = roots({3, -1, 2});
  CHECK(r.values() == coeffs({-1, 2, 3}));
  CHECK(r.max_abs() == 3);
}

TEST_CASE("from_roots matches hand-expanded products") {
  CHECK(from_roots(roots({1, 2})) == Polynomial(coeffs({1, -3, 2})));
  CHECK(from_roots(roots({1, 2, 3})) == Polynomial(coeffs({1, -6, 11, -6})));
  CHECK(from_roots(roots({-1, -1})) == Polynomial(coeffs({1, 2, 1})));
}

TEST_CASE("symmetric functions match direct summation") {
  CHECK(symmetric_functions(roots({1, 2, 3})).s == coeffs({6, 11, 6}));
  CHECK(symmetric_functions(roots({7})).s == coeffs({7}));
  CHECK(symmetric_functions(roots({1, -1})).s == coeffs({0, -1}));
}

TEST_CASE("evaluation is exact") {
  Polynomial p(coeffs({1, -3, 2}));
  CHECK(p(Int(1)) == 0);
  CHECK(p(Int(0)) == 2);
  CHECK(Polynomial(coeffs({1, -6, 11, -6}))(Int(4)) == 6);
}

TEST_CASE("multiplication is exact convolution") {
  CHECK(multiply(Polynomial(coeffs({1, -1})), Polynomial(coeffs({1, 1}))) ==
        Polynomial(coeffs({1, 0, -1})));
  CHECK(multiply(Polynomial(coeffs({1, -3, 2})), Polynomial(coeffs({1, 1}))) ==
        Polynomial(coeffs({1, -2, -1, 2})));
  Polynomial p(coeffs({1, -6, 11, -6}));
  CHECK(multiply(p, Polynomial::one()) == p);
}

TEST_CASE("exhaustive sweep: construction, evaluation and symmetric functions agree") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_multiset(n, 6, [&](const std::vector<std::int64_t>& tuple) {
      std::vector<Int> rs(tuple.begin(), tuple.end());
      RootMultiset rm(rs);
      Polynomial p = from_roots(rm);
      REQUIRE(p.coefficients() == oracle::expand_by_subsets(rs));
      for (const Int& r : rm.values()) REQUIRE(p(r) == 0);
      std::vector<Int> e = oracle::symmetric_by_subsets(rs);
      introots::SymmetricVector s = symmetric_functions(rm);
      REQUIRE(s.s == e);
      for (std::size_t j = 1; j <= rs.size(); ++j) {
        Int expected = s.s[j - 1];
        if (j % 2 != 0) expected = -expected;
        REQUIRE(p.coefficient(static_cast<int>(j)) == expected);
      }
    });
  }
}

TEST_CASE("from_roots of a union is the product of the parts") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> a = random_roots(rng, 4);
    std::vector<Int> b = random_roots(rng, 4);
    std::vector<Int> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(from_roots(RootMultiset(both)) ==
          multiply(from_roots(RootMultiset(a)), from_roots(RootMultiset(b))));
  }
}

TEST_CASE("multiplier polynomials") {
  CHECK(introots::multiplier_polynomial(1) == Polynomial(coeffs({1, 1})));
  CHECK(introots::multiplier_polynomial(2) == Polynomial(coeffs({1, 0, -1})));
  CHECK(introots::multiplier_polynomial(3) == Polynomial(coeffs({1, 1, -1, -1})));
  CHECK_THROWS_AS(introots::multiplier_polynomial(0), std::invalid_argument);

  for (int m = 1; m <= 30; ++m) {
    Polynomial f = introots::multiplier_polynomial(m);
    CHECK(f.degree() == m);
    Int l1 = 0;
    for (const Int& c : f.coefficients()) l1 += abs(c);
    CHECK(l1 == introots::pow2(static_cast<std::uint64_t>((m + 1) / 2)));
    Int constant = abs(f.coefficient(m));
    CHECK(constant == 1);
  }
}

TEST_CASE("family polynomials are even with prescribed roots") {
  CHECK(introots::family_polynomial(coeffs({1})) == Polynomial(coeffs({1, 0, -1})));
  CHECK(introots::family_polynomial(coeffs({1, 2})) == Polynomial(coeffs({1, 0, -5, 0, 4})));
  CHECK(introots::family_polynomial(coeffs({2, 3})) == Polynomial(coeffs({1, 0, -13, 0, 36})));
  CHECK_THROWS_AS(introots::family_polynomial(std::vector<Int>{}), std::invalid_argument);
  CHECK_THROWS_AS(introots::family_polynomial(coeffs({1, 0})), std::invalid_argument);

  // distinct |r| multisets give distinct polynomials, all zero at odd indices
  std::set<std::vector<Int>> seen;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> value_dist(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> rs(1 + static_cast<std::size_t>(trial % 3));
    for (auto& r : rs) r = value_dist(rng) * (trial % 2 == 0 ? 1 : -1);
    Polynomial p = introots::family_polynomial(rs);
    CHECK(p.degree() == 2 * static_cast<int>(rs.size()));
    for (int i = 1; i <= p.degree(); i += 2) CHECK(p.coefficient(i) == 0);
    // roots come in +- pairs
    for (const Int& r : rs) {
      CHECK(p(r) == 0);
      CHECK(p(-r) == 0);
    }
    seen.insert(p.coefficients());
  }
  CHECK(seen.size() > 1);
}

TEST_CASE("sign flip negates roots and is an involution") {
  CHECK(sign_flip(Polynomial(coeffs({1, -3, 2}))) == Polynomial(coeffs({1, 3, 2})));
  CHECK(sign_flip(Polynomial(coeffs({1, 0, -1}))) == Polynomial(coeffs({1, 0, -1})));
  CHECK(sign_flip(Polynomial(coeffs({1, -6, 11, -6}))) == Polynomial(coeffs({1, 6, 11, 6})));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> rs = random_roots(rng, 5);
    Polynomial p = from_roots(RootMultiset(rs));
    CHECK(sign_flip(sign_flip(p)) == p);
    std::vector<Int> negated;
    for (const Int& r : rs) negated.push_back(-r);
    CHECK(sign_flip(p) == from_roots(RootMultiset(negated)));
  }
}

TEST_CASE("coefficient order is degree-first lexicographic") {
  CHECK(coeff_less(Polynomial(coeffs({1, -1, -2})), Polynomial(coeffs({1, 0, -1}))));
  CHECK(coeff_less(Polynomial(coeffs({1, 1})), Polynomial(coeffs({1, 0, -1}))));
  CHECK_FALSE(coeff_less(Polynomial(coeffs({1, 0, -1})), Polynomial(coeffs({1, 0, -1}))));
}
