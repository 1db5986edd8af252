#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "introots/enumeration.hpp"
#include "introots/serialize.hpp"
#include "oracles.hpp"

using introots::EnumerationResult;
using introots::EnumerationStatus;
using introots::Int;
using introots::PairConstraint;
using introots::SearchOptions;
using introots::enumerate_last_pair;
using introots::enumerate_pair;
using introots::to_json;

namespace {

std::vector<Int> ints(std::initializer_list<long long> values) {
  std::vector<Int> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

std::vector<std::vector<Int>> root_sets(const EnumerationResult& result) {
  std::vector<std::vector<Int>> out;
  for (const auto& s : result.solutions) out.push_back(s.roots.values());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("enumerate_pair reproduces the worked examples") {
  EnumerationResult r1 = enumerate_pair({2, 1, -3, 2});
  CHECK(r1.status == EnumerationStatus::complete);
  REQUIRE(r1.solutions.size() == 1);
  CHECK(r1.solutions[0].roots.values() == ints({1, 2}));
  CHECK(r1.solutions[0].poly.coefficients() == ints({1, -3, 2}));
  // ties at radius 2 resolve to the constant-term certificate
  CHECK(r1.radius_used.radius == Int(2));
  CHECK(r1.radius_used.method == introots::BoundMethod::constant_term);

  EnumerationResult r2 = enumerate_pair({3, 1, -6, 11});
  CHECK(r2.status == EnumerationStatus::complete);
  REQUIRE(r2.solutions.size() == 1);
  CHECK(r2.solutions[0].roots.values() == ints({1, 2, 3}));
  CHECK(r2.radius_used.radius == Int(3));
  CHECK(r2.radius_used.method == introots::BoundMethod::sum_of_squares);
  // no pruning, so the node count is the full scan size at radius 3
  CHECK(r2.nodes_visited == 6 + 21 + 56);
}

TEST_CASE("infeasible constraints short-circuit") {
  EnumerationResult zeros = enumerate_pair({2, 1, 0, 0});
  CHECK(zeros.status == EnumerationStatus::infeasible_by_lemma2);
  CHECK(zeros.solutions.empty());
  CHECK(zeros.nodes_visited == 0);

  // negative sum of squares at j = 1
  EnumerationResult sos = enumerate_pair({2, 1, 0, 1});
  CHECK(sos.status == EnumerationStatus::infeasible_by_bound);
  CHECK(sos.radius_used.method == introots::BoundMethod::sum_of_squares);
  CHECK_FALSE(sos.radius_used.radius.has_value());

  // zero constant term at j + 1 = n
  EnumerationResult zero_an = enumerate_pair({3, 2, 5, 0});
  CHECK(zero_an.status == EnumerationStatus::infeasible_by_bound);
  CHECK(zero_an.radius_used.method == introots::BoundMethod::constant_term);

  // radius 0 is a complete, empty result: the squared roots would sum to 0
  EnumerationResult zero_radius = enumerate_pair({2, 1, 2, 2});
  CHECK(zero_radius.status == EnumerationStatus::complete);
  CHECK(zero_radius.solutions.empty());
  CHECK(zero_radius.radius_used.radius == Int(0));
  CHECK(zero_radius.nodes_visited == 0);

  CHECK_THROWS_AS(enumerate_pair({1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_pair({3, 3, 1, 1}), std::invalid_argument);
}

TEST_CASE("enumerate_last_pair factorizes the constant term") {
  EnumerationResult r1 = enumerate_last_pair({2, 1, -3, 2});
  REQUIRE(r1.solutions.size() == 1);
  CHECK(r1.solutions[0].roots.values() == ints({1, 2}));
  CHECK(r1.radius_used.method == introots::BoundMethod::constant_term);

  EnumerationResult r2 = enumerate_last_pair({3, 2, 11, -6});
  REQUIRE(r2.solutions.size() == 1);
  CHECK(r2.solutions[0].roots.values() == ints({1, 2, 3}));

  EnumerationResult r3 = enumerate_last_pair({2, 1, 0, -1});
  REQUIRE(r3.solutions.size() == 1);
  CHECK(r3.solutions[0].roots.values() == ints({-1, 1}));

  EnumerationResult zero_an = enumerate_last_pair({3, 2, 5, 0});
  CHECK(zero_an.status == EnumerationStatus::infeasible_by_bound);

  CHECK_THROWS_AS(enumerate_last_pair({3, 1, -6, 11}), std::invalid_argument);
}

TEST_CASE("brute force space") {
  auto tiny = introots::brute_force_all(2, 1);
  REQUIRE(tiny.size() == 3);
  CHECK(tiny[0].roots.values() == ints({-1, -1}));
  CHECK(tiny[1].roots.values() == ints({-1, 1}));
  CHECK(tiny[2].roots.values() == ints({1, 1}));

  CHECK(introots::brute_force_all(2, 2).size() == oracle::multichoose_pascal(4, 2).convert_to<std::size_t>());
  CHECK(introots::brute_force_all(3, 1).size() == 4);

  CHECK_THROWS_AS(introots::brute_force_all(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(introots::brute_force_all(2, 0), std::invalid_argument);
}

TEST_CASE("budget violations are explicit errors") {
  SearchOptions tight;
  tight.node_budget = 10;
  CHECK_THROWS_AS(introots::brute_force_all(3, 100, tight), introots::BudgetError);
  CHECK_THROWS_AS(enumerate_pair({6, 3, 1, 1}), introots::BudgetError);

  try {
    introots::brute_force_all(3, 100, tight);
    FAIL("expected BudgetError");
  } catch (const introots::BudgetError& e) {
    CHECK(e.limit == 10);
    CHECK(e.estimated_nodes == introots::multichoose(200, 3));
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}

TEST_CASE("oracle equivalence on a small sweep") {
  for (int n = 2; n <= 3; ++n) {
    // realized coefficient pairs at radius 2
    std::map<std::pair<int, std::pair<Int, Int>>, bool> constraints;
    for (const auto& sol : introots::brute_force_all(n, 2)) {
      const auto& a = sol.poly.coefficients();
      for (int j = 1; j <= n - 1; ++j)
        constraints[{j, {a[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j) + 1]}}] = true;
    }
    for (const auto& [key, unused] : constraints) {
      (void)unused;
      const auto& [j, pair] = key;
      PairConstraint c{n, j, pair.first, pair.second};
      EnumerationResult result = enumerate_pair(c);
      REQUIRE(result.status == EnumerationStatus::complete);
      REQUIRE(std::is_sorted(result.solutions.begin(), result.solutions.end(),
                             [](const introots::Solution& a, const introots::Solution& b) {
                               return coeff_less(a.poly, b.poly);
                             }));
      const Int radius = *result.radius_used.radius;

      std::vector<std::vector<Int>> expected;
      for (const auto& sol : introots::brute_force_all(n, radius)) {
        const auto& a = sol.poly.coefficients();
        if (a[static_cast<std::size_t>(j)] == c.aj && a[static_cast<std::size_t>(j) + 1] == c.aj1)
          expected.push_back(sol.roots.values());
      }
      std::sort(expected.begin(), expected.end());
      CHECK(root_sets(result) == expected);

      if (j == n - 1) {
        EnumerationResult last = enumerate_last_pair(c);
        CHECK(last.status == EnumerationStatus::complete);
        CHECK(root_sets(last) == expected);
      }
    }
  }
}

TEST_CASE("sign flip equivariance") {
  for (int n = 2; n <= 3; ++n) {
    std::set<std::pair<int, std::pair<Int, Int>>> constraints;
    for (const auto& sol : introots::brute_force_all(n, 2)) {
      const auto& a = sol.poly.coefficients();
      for (int j = 1; j <= n - 1; ++j)
        constraints.insert({j, {a[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j) + 1]}});
    }
    for (const auto& [j, pair] : constraints) {
      EnumerationResult base = enumerate_pair({n, j, pair.first, pair.second});
      Int flipped_aj = (j % 2 == 0) ? pair.first : -pair.first;
      Int flipped_aj1 = ((j + 1) % 2 == 0) ? pair.second : -pair.second;
      EnumerationResult mirrored = enumerate_pair({n, j, flipped_aj, flipped_aj1});

      std::vector<std::vector<Int>> negated;
      for (const auto& s : base.solutions) {
        std::vector<Int> rs;
        for (const Int& r : s.roots.values()) rs.push_back(-r);
        std::sort(rs.begin(), rs.end());
        negated.push_back(std::move(rs));
      }
      std::sort(negated.begin(), negated.end());
      CHECK(negated == root_sets(mirrored));
    }
  }
}

TEST_CASE("solutions respect the certified radius") {
  for (const auto& c : {PairConstraint{3, 1, -6, 11}, PairConstraint{4, 2, 3, -2},
                        PairConstraint{2, 1, 0, -4}}) {
    EnumerationResult result = enumerate_pair(c);
    REQUIRE(result.status == EnumerationStatus::complete);
    for (const auto& s : result.solutions) REQUIRE(s.roots.max_abs() <= *result.radius_used.radius);
  }
}

TEST_CASE("parallel execution is byte-identical to sequential") {
  for (const auto& c : {PairConstraint{3, 1, -6, 11}, PairConstraint{4, 2, 3, -2},
                        PairConstraint{4, 3, 2, -4}}) {
    SearchOptions sequential{.node_budget = 100'000'000, .threads = 1};
    SearchOptions parallel{.node_budget = 100'000'000, .threads = 4};
    EnumerationResult a = enumerate_pair(c, sequential);
    EnumerationResult b = enumerate_pair(c, parallel);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.nodes_visited == b.nodes_visited);
  }
}

TEST_CASE("node counts match the closed form") {
  // radius 3 gives 6 candidate values per position
  EnumerationResult r = enumerate_pair({3, 1, -6, 11});
  Int expected = oracle::multichoose_pascal(6, 1) + oracle::multichoose_pascal(6, 2) +
                 oracle::multichoose_pascal(6, 3);
  CHECK(Int(r.nodes_visited) == expected);
}

TEST_CASE("tightness leaderboard") {
  auto tiny = introots::tightness_search(2, 1, 1);
  REQUIRE(tiny.size() == 3);
  CHECK(tiny[0].roots.values() == ints({-1, 1}));
  CHECK(tiny[0].ratio_squared == introots::Rational(1));

  auto board = introots::tightness_search(2, 1, 3);
  REQUIRE(board.size() == 10);
  CHECK(board[0].ratio_squared == introots::Rational(1));
  // ties at ratio 1 resolve by coefficient order: [1,-2,-3] precedes [1,-1,-2]
  CHECK(board[0].roots.values() == ints({-1, 3}));
  CHECK(board[1].roots.values() == ints({-1, 2}));
  CHECK(board[2].roots.values() == ints({-1, 1}));
  for (const auto& entry : board) CHECK(entry.ratio_squared <= introots::Rational(1));

  auto cubic = introots::tightness_search(3, 1, 4);
  REQUIRE(cubic.size() == 10);
  for (const auto& entry : cubic) CHECK(entry.ratio_squared <= introots::Rational(2));

  CHECK_THROWS_AS(introots::tightness_search(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(introots::tightness_search(2, 1, 3, 0), std::invalid_argument);
}
