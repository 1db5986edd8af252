#include "introots/enumeration.hpp"

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>

namespace introots {
namespace {

// Exact number of DFS nodes in a full scan over nondecreasing sequences of
// depth 1..n from v candidate values. Valid because the scan never prunes.
Int scan_node_count(const Int& v, int n) {
  Int total = 0;
  for (int d = 1; d <= n; ++d) total += multichoose(v, d);
  return total;
}

void ensure_budget(const Int& estimate, std::uint64_t limit) {
  if (estimate > limit) throw BudgetError(estimate, limit);
}

// DFS state over nondecreasing root sequences. coeffs[d] holds the
// coefficient sequence (leading-first, size d+1) of prod_{i<d} (x - x_i).
struct ScanState {
  int n;
  Int radius;
  std::vector<std::vector<Int>> coeffs;
  std::vector<Int> roots;
  std::uint64_t nodes = 0;

  ScanState(int n_, const Int& radius_) : n(n_), radius(radius_), roots(static_cast<std::size_t>(n_)) {
    coeffs.resize(static_cast<std::size_t>(n_) + 1);
    for (int d = 0; d <= n_; ++d) coeffs[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d) + 1, Int(0));
    coeffs[0][0] = 1;
  }

  void place(int depth, const Int& r) {
    const auto& src = coeffs[static_cast<std::size_t>(depth)];
    auto& dst = coeffs[static_cast<std::size_t>(depth) + 1];
    dst[0] = 1;
    for (int i = 1; i <= depth; ++i) dst[static_cast<std::size_t>(i)] = src[static_cast<std::size_t>(i)] - r * src[static_cast<std::size_t>(i) - 1];
    dst[static_cast<std::size_t>(depth) + 1] = -r * src[static_cast<std::size_t>(depth)];
    roots[static_cast<std::size_t>(depth)] = r;
    ++nodes;
  }
};

// Extends the current prefix with every value v in [min_value, radius]\{0},
// calling leaf(roots, coeffs) for each completed sequence.
template <class LeafFn>
void scan_from(ScanState& st, int depth, const Int& min_value, LeafFn&& leaf) {
  for (Int v = min_value; v <= st.radius; ++v) {
    if (v == 0) continue;
    st.place(depth, v);
    if (depth + 1 == st.n)
      leaf(st.roots, st.coeffs[static_cast<std::size_t>(st.n)]);
    else
      scan_from(st, depth + 1, v, leaf);
  }
}

template <class LeafFn>
std::uint64_t scan_all(int n, const Int& radius, LeafFn&& leaf) {
  ScanState st(n, radius);
  scan_from(st, 0, -radius, leaf);
  return st.nodes;
}

// i-th candidate first value in [-radius, radius]\{0}, ascending.
Int first_value(const Int& radius, std::uint64_t i) {
  Int v = -radius + i;
  if (v >= 0) ++v;
  return v;
}

void validate_constraint(const PairConstraint& c) {
  if (c.n < 2) throw std::invalid_argument("enumerate: n must be >= 2");
  if (c.j < 1 || c.j > c.n - 1) throw std::invalid_argument("enumerate: j must be in 1..n-1");
}

EnumerationResult finish(EnumerationStatus status, BoundCertificate cert, std::uint64_t nodes,
                         std::vector<Solution> solutions) {
  std::sort(solutions.begin(), solutions.end(),
            [](const Solution& a, const Solution& b) { return coeff_less(a.poly, b.poly); });
  return {status, std::move(cert), nodes, std::move(solutions)};
}

int method_rank(BoundMethod m) {
  switch (m) {
    case BoundMethod::constant_term: return 0;
    case BoundMethod::sum_of_squares: return 1;
    case BoundMethod::alpha: return 2;
  }
  return 3;
}

} // namespace

std::string_view status_name(EnumerationStatus s) {
  switch (s) {
    case EnumerationStatus::complete: return "complete";
    case EnumerationStatus::infeasible_by_lemma2: return "infeasible-by-lemma2";
    case EnumerationStatus::infeasible_by_bound: return "infeasible-by-bound";
  }
  return "unknown";
}

BudgetError::BudgetError(Int estimated_nodes_, std::uint64_t limit_)
    : std::runtime_error("search size " + estimated_nodes_.str() + " nodes exceeds the budget of " +
                         std::to_string(limit_) + " nodes"),
      estimated_nodes(std::move(estimated_nodes_)),
      limit(limit_) {}

EnumerationResult enumerate_pair(const PairConstraint& c, const SearchOptions& options) {
  validate_constraint(c);
  if (c.aj == 0 && c.aj1 == 0)
    return {EnumerationStatus::infeasible_by_lemma2, root_bound_alpha(c.n, 0), 0, {}};

  if (c.j + 1 == c.n && c.aj1 == 0) {
    // nonzero roots force a nonzero constant term
    BoundCertificate cert{BoundMethod::constant_term, std::nullopt, std::nullopt, {{"an", c.aj1}}};
    return {EnumerationStatus::infeasible_by_bound, std::move(cert), 0, {}};
  }

  Int aj_abs = abs(c.aj);
  Int aj1_abs = abs(c.aj1);
  std::vector<BoundCertificate> certs;
  certs.push_back(root_bound_alpha(c.n, std::max(aj_abs, aj1_abs)));
  if (c.j == 1) certs.push_back(root_bound_first_principle(c.aj, c.aj1));
  if (c.j + 1 == c.n) certs.push_back(root_bound_constant_term(c.aj1));

  for (auto& cert : certs)
    if (!cert.radius) return {EnumerationStatus::infeasible_by_bound, std::move(cert), 0, {}};

  std::size_t best = 0;
  for (std::size_t i = 1; i < certs.size(); ++i) {
    if (*certs[i].radius < *certs[best].radius ||
        (*certs[i].radius == *certs[best].radius &&
         method_rank(certs[i].method) < method_rank(certs[best].method)))
      best = i;
  }
  BoundCertificate cert = std::move(certs[best]);
  const Int radius = *cert.radius;
  if (radius < 1) return {EnumerationStatus::complete, std::move(cert), 0, {}};

  const Int value_count = 2 * radius;
  ensure_budget(scan_node_count(value_count, c.n), options.node_budget);
  const auto values = value_count.convert_to<std::uint64_t>();  // <= budget after the gate

  const int j = c.j;
  auto match_scan = [&](std::uint64_t lo, std::uint64_t stride, std::vector<Solution>& out) -> std::uint64_t {
    ScanState st(c.n, radius);
    auto leaf = [&](const std::vector<Int>& roots, const std::vector<Int>& coeffs) {
      if (coeffs[static_cast<std::size_t>(j)] == c.aj && coeffs[static_cast<std::size_t>(j) + 1] == c.aj1)
        out.push_back({RootMultiset(roots), Polynomial(coeffs)});
    };
    for (std::uint64_t i = lo; i < values; i += stride) {
      Int first = first_value(radius, i);
      st.place(0, first);
      scan_from(st, 1, first, leaf);
    }
    return st.nodes;
  };

  std::vector<Solution> solutions;
  std::uint64_t nodes = 0;
  const int workers = static_cast<int>(std::min<std::uint64_t>(std::max(options.threads, 1), values));
  if (workers <= 1) {
    nodes = match_scan(0, 1, solutions);
  } else {
    // Workers share nothing; solution order is restored by the final sort,
    // so the merge is independent of scheduling.
    std::vector<std::vector<Solution>> found(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        counts[static_cast<std::size_t>(w)] =
            match_scan(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(workers), found[static_cast<std::size_t>(w)]);
      });
    for (auto& t : pool) t.join();
    for (int w = 0; w < workers; ++w) {
      nodes += counts[static_cast<std::size_t>(w)];
      for (auto& s : found[static_cast<std::size_t>(w)]) solutions.push_back(std::move(s));
    }
  }
  return finish(EnumerationStatus::complete, std::move(cert), nodes, std::move(solutions));
}

EnumerationResult enumerate_last_pair(const PairConstraint& c, const SearchOptions& options) {
  validate_constraint(c);
  if (c.j != c.n - 1) throw std::invalid_argument("enumerate_last_pair: requires j = n-1");
  if (c.aj == 0 && c.aj1 == 0)
    return {EnumerationStatus::infeasible_by_lemma2, root_bound_alpha(c.n, 0), 0, {}};
  if (c.aj1 == 0) {
    BoundCertificate cert{BoundMethod::constant_term, std::nullopt, std::nullopt, {{"an", c.aj1}}};
    return {EnumerationStatus::infeasible_by_bound, std::move(cert), 0, {}};
  }

  BoundCertificate cert = root_bound_constant_term(c.aj1);

  // product of the roots: s_n = (-1)^n a_n
  const Int product = (c.n % 2 == 0) ? c.aj1 : -c.aj1;
  const Int magnitude = abs(product);

  // Every root divides the product, so collect the divisors once. Trial
  // division is the budgeted cost of this algorithm.
  const Int trial_limit = isqrt(magnitude);
  ensure_budget(trial_limit, options.node_budget);
  std::vector<Int> divisors;
  for (Int d = 1; d <= trial_limit; ++d) {
    if (magnitude % d != 0) continue;
    divisors.push_back(d);
    Int q = magnitude / d;
    if (q != d) divisors.push_back(std::move(q));
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<Int> candidates;
  candidates.reserve(2 * divisors.size());
  for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) candidates.push_back(-*it);
  for (const Int& d : divisors) candidates.push_back(d);

  std::vector<Solution> solutions;
  std::uint64_t nodes = 0;
  std::vector<Int> roots;
  roots.reserve(static_cast<std::size_t>(c.n));

  auto search = [&](auto&& self, std::size_t start, const Int& remaining, int slots) -> void {
    if (slots == 0) {
      if (remaining != 1) return;
      RootMultiset rm(roots);
      Polynomial p = from_roots(rm);
      if (p.coefficient(c.j) == c.aj) solutions.push_back({std::move(rm), std::move(p)});
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (++nodes > options.node_budget) throw BudgetError(Int(nodes), options.node_budget);
      if (remaining % candidates[i] != 0) continue;
      roots.push_back(candidates[i]);
      self(self, i, remaining / candidates[i], slots - 1);
      roots.pop_back();
    }
  };
  search(search, 0, product, c.n);

  return finish(EnumerationStatus::complete, std::move(cert), nodes, std::move(solutions));
}

std::vector<Solution> brute_force_all(int n, const Int& radius, const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("brute_force_all: n must be >= 2");
  if (radius < 1) throw std::invalid_argument("brute_force_all: radius must be >= 1");
  ensure_budget(multichoose(2 * radius, n), options.node_budget);
  std::vector<Solution> out;
  scan_all(n, radius, [&out](const std::vector<Int>& roots, const std::vector<Int>& coeffs) {
    out.push_back({RootMultiset(roots), Polynomial(coeffs)});
  });
  return out;
}

std::vector<TightnessEntry> tightness_search(int n, int j, const Int& radius, int top_k,
                                             const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("tightness_search: n must be >= 2");
  if (j < 1 || j > n - 1) throw std::invalid_argument("tightness_search: j must be in 1..n-1");
  if (radius < 1) throw std::invalid_argument("tightness_search: radius must be >= 1");
  if (top_k < 1) throw std::invalid_argument("tightness_search: top_k must be >= 1");
  ensure_budget(multichoose(2 * radius, n), options.node_budget);

  auto better = [](const TightnessEntry& a, const TightnessEntry& b) {
    if (a.ratio_squared != b.ratio_squared) return a.ratio_squared > b.ratio_squared;
    return coeff_less(a.poly, b.poly);
  };

  std::vector<TightnessEntry> best;
  scan_all(n, radius, [&](const std::vector<Int>& roots, const std::vector<Int>& coeffs) {
    Int cj = abs(coeffs[static_cast<std::size_t>(j)]);
    Int cj1 = abs(coeffs[static_cast<std::size_t>(j) + 1]);
    Int m = std::max(cj, cj1);
    if (m == 0) return;  // cannot occur: no two adjacent zero coefficients
    Int lo = abs(roots.front());
    Int hi = abs(roots.back());
    Int mx = std::max(lo, hi);
    TightnessEntry entry{RootMultiset(roots), Polynomial(coeffs), Rational(mx * mx, m * m)};
    auto pos = std::lower_bound(best.begin(), best.end(), entry, better);
    if (pos == best.end() && best.size() >= static_cast<std::size_t>(top_k)) return;
    best.insert(pos, std::move(entry));
    if (best.size() > static_cast<std::size_t>(top_k)) best.pop_back();
  });
  return best;
}

} // namespace introots
