// introots - exact search and certification for monic polynomials with
// nonzero integer roots.
//
// Exit codes: 0 success, 1 infeasible constraint or failed checks,
// 2 malformed input, 3 search budget exceeded.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "introots/chains.hpp"
#include "introots/enumeration.hpp"
#include "introots/inequalities.hpp"
#include "introots/serialize.hpp"
#include "introots/verify.hpp"

namespace {

using introots::Int;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

Int parse_int_flag(const std::string& text, const char* flag) {
  auto value = introots::parse_int(text);
  if (!value)
    throw std::invalid_argument(std::string(flag) + ": expected a base-10 integer, got '" + text + "'");
  return *value;
}

std::vector<Int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<Int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_int_flag(item, flag));
  if (values.empty()) throw std::invalid_argument(std::string(flag) + ": expected a comma-separated list");
  return values;
}

std::string bracket_list(const std::vector<Int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += xs[i].str();
  }
  return out + "]";
}

void print_poly_text(const introots::Polynomial& p, const introots::RootMultiset* roots) {
  std::cout << "degree: " << p.degree() << '\n';
  std::cout << "coeffs: " << bracket_list(p.coefficients()) << '\n';
  if (roots != nullptr) std::cout << "roots: " << bracket_list(roots->values()) << '\n';
}

void print_cert_text(const introots::BoundCertificate& cert) {
  std::cout << "method: " << introots::method_name(cert.method) << '\n';
  std::cout << "radius: " << (cert.radius ? cert.radius->str() : std::string("infeasible")) << '\n';
  if (cert.alpha_squared) std::cout << "alpha_squared: " << cert.alpha_squared->str() << '\n';
  std::cout << "inputs:";
  for (const auto& [key, value] : cert.inputs) std::cout << ' ' << key << '=' << value.str();
  std::cout << '\n';
}

void print_report_text(const introots::CheckReport& report) {
  for (const auto& v : report.verdicts)
    std::cout << v.check << " @" << v.index << ": lhs=" << v.lhs.str() << " rhs=" << v.rhs.str()
              << " -> " << (v.pass ? "pass" : "FAIL") << '\n';
  std::cout << "overall: " << (report.all_pass() ? "pass" : "FAIL") << '\n';
}

struct EnumerateArgs {
  int n = 0;
  int j = 0;
  std::string aj, aj1;
  std::string format = "text";
  int threads = 1;
  std::uint64_t budget = introots::SearchOptions{}.node_budget;
};

int run_enumerate(const EnumerateArgs& args) {
  introots::PairConstraint c{args.n, args.j, parse_int_flag(args.aj, "--aj"),
                             parse_int_flag(args.aj1, "--aj1")};
  introots::SearchOptions options{args.budget, args.threads};
  introots::EnumerationResult result = introots::enumerate_pair(c, options);
  if (args.format == "json") {
    std::cout << introots::to_json(result) << '\n';
  } else {
    std::cout << "status: " << introots::status_name(result.status) << '\n';
    std::cout << "radius: "
              << (result.radius_used.radius ? result.radius_used.radius->str() : std::string("infeasible"))
              << '\n';
    std::cout << "method: " << introots::method_name(result.radius_used.method) << '\n';
    std::cout << "nodes: " << result.nodes_visited << '\n';
    std::cout << "solutions: " << result.solutions.size() << '\n';
    for (const auto& s : result.solutions)
      std::cout << "  roots=" << bracket_list(s.roots.values())
                << " coeffs=" << bracket_list(s.poly.coefficients()) << '\n';
  }
  return result.status == introots::EnumerationStatus::complete ? kExitOk : kExitInfeasible;
}

struct BoundArgs {
  std::string method;
  std::string n, M, a1, a2, an;
  std::string format = "text";
};

int run_bound(const BoundArgs& args) {
  introots::BoundCertificate cert;
  auto require = [](const std::string& value, const char* flag, const char* method) {
    if (value.empty())
      throw std::invalid_argument(std::string(flag) + " is required with --method " + method);
  };
  if (args.method == "alpha") {
    require(args.n, "--n", "alpha");
    require(args.M, "--M", "alpha");
    Int n = parse_int_flag(args.n, "--n");
    // alpha^4 = 2^(n^2+2n-18) occupies ~n^2/8 bytes; cap where that is still MBs
    if (n < 2 || n > 10'000) throw std::invalid_argument("--n: expected an integer in [2, 10000]");
    cert = introots::root_bound_alpha(n.convert_to<int>(), parse_int_flag(args.M, "--M"));
  } else if (args.method == "sum-of-squares") {
    require(args.a1, "--a1", "sum-of-squares");
    require(args.a2, "--a2", "sum-of-squares");
    cert = introots::root_bound_first_principle(parse_int_flag(args.a1, "--a1"),
                                                parse_int_flag(args.a2, "--a2"));
  } else {
    require(args.an, "--an", "constant-term");
    cert = introots::root_bound_constant_term(parse_int_flag(args.an, "--an"));
  }
  if (args.format == "json")
    std::cout << introots::to_json(cert) << '\n';
  else
    print_cert_text(cert);
  return cert.radius ? kExitOk : kExitInfeasible;
}

int run_check(const std::string& coeffs, const std::string& format) {
  std::vector<Int> a = parse_int_list(coeffs, "--coeffs");
  if (a.front() != 1)
    throw std::invalid_argument("--coeffs: a_0 must be 1 (coefficients are listed leading-first)");
  introots::Polynomial p(std::move(a));
  introots::CheckReport report = introots::check_all(p);
  if (format == "json")
    std::cout << introots::to_json(report) << '\n';
  else
    print_report_text(report);
  return report.all_pass() ? kExitOk : kExitInfeasible;
}

int run_chains(int n, const std::string& format) {
  introots::ChainCount count = introots::chain_count_exact(n);
  if (format == "json") {
    std::cout << introots::to_json(count) << '\n';
  } else {
    std::ostringstream ratio;
    ratio << introots::chain_ratio(count);
    std::cout << "n=" << count.n << " good=" << count.good.str() << " total=" << count.total.str()
              << " ratio=" << ratio.str() << '\n';
  }
  return kExitOk;
}

int run_family(const std::string& rs, const std::string& format) {
  std::vector<Int> factors = parse_int_list(rs, "--rs");
  introots::Polynomial p = introots::family_polynomial(factors);
  std::vector<Int> roots;
  for (const Int& r : factors) {
    roots.push_back(r < 0 ? r : -r);
    roots.push_back(r < 0 ? -r : r);
  }
  introots::RootMultiset rm(std::move(roots));
  if (format == "json")
    std::cout << introots::to_json(p, rm) << '\n';
  else
    print_poly_text(p, &rm);
  return kExitOk;
}

int run_multiplier(int m, const std::string& format) {
  introots::Polynomial p = introots::multiplier_polynomial(m);
  // roots by construction: (m+1)/2 copies of -1 and m/2 copies of +1
  std::vector<Int> roots;
  for (int i = 0; i < (m + 1) / 2; ++i) roots.push_back(-1);
  for (int i = 0; i < m / 2; ++i) roots.push_back(1);
  introots::RootMultiset rm(std::move(roots));
  if (format == "json")
    std::cout << introots::to_json(p, rm) << '\n';
  else
    print_poly_text(p, &rm);
  return kExitOk;
}

struct VerifyArgs {
  int n_max = 0;
  std::string radius;
  std::string format = "text";
  std::uint64_t budget = introots::SearchOptions{}.node_budget;
};

int run_verify(const VerifyArgs& args) {
  introots::SearchOptions options{args.budget, 1};
  introots::SweepSummary summary =
      introots::verify_sweep(args.n_max, parse_int_flag(args.radius, "--radius"), options);
  if (args.format == "json") {
    std::cout << introots::to_json(summary) << '\n';
  } else {
    std::cout << "n_max: " << summary.n_max << '\n';
    std::cout << "radius: " << summary.radius.str() << '\n';
    std::cout << "polynomials: " << summary.polynomials << '\n';
    std::cout << "verdicts: " << summary.verdicts << '\n';
    std::cout << "violations: " << summary.violations << '\n';
    if (summary.first_violation) {
      const auto& v = *summary.first_violation;
      std::cout << "first counterexample: n=" << v.n << " roots=" << bracket_list(v.roots.values())
                << " check=" << v.check << " @" << v.index << " lhs=" << v.lhs.str()
                << " rhs=" << v.rhs.str() << '\n';
    }
    std::cout << "overall: " << (summary.violations == 0 ? "pass" : "FAIL") << '\n';
  }
  return summary.violations == 0 ? kExitOk : kExitInfeasible;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search and certification for monic polynomials with nonzero integer roots"};
  app.set_version_flag("--version", "introots 0.1.0");
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "List every member with a prescribed consecutive coefficient pair");
  cmd_enumerate->add_option("--n", enum_args.n, "Degree (>= 2)")->required();
  cmd_enumerate->add_option("--j", enum_args.j, "Pair position, 1..n-1")->required();
  cmd_enumerate->add_option("--aj", enum_args.aj, "Prescribed a_j")->required();
  cmd_enumerate->add_option("--aj1", enum_args.aj1, "Prescribed a_{j+1}")->required();
  cmd_enumerate->add_option("--threads", enum_args.threads, "DFS workers")->capture_default_str();
  cmd_enumerate->add_option("--budget", enum_args.budget, "Node budget")->capture_default_str();
  add_format_option(cmd_enumerate, enum_args.format);

  BoundArgs bound_args;
  CLI::App* cmd_bound = app.add_subcommand("bound", "Compute a certified root radius");
  cmd_bound->add_option("--method", bound_args.method, "Bound to compute")
      ->check(CLI::IsMember({"alpha", "sum-of-squares", "constant-term"}))
      ->required();
  cmd_bound->add_option("--n", bound_args.n, "Degree (alpha method)");
  cmd_bound->add_option("--M", bound_args.M, "Coefficient pair bound (alpha method)");
  cmd_bound->add_option("--a1", bound_args.a1, "a_1 (sum-of-squares method)");
  cmd_bound->add_option("--a2", bound_args.a2, "a_2 (sum-of-squares method)");
  cmd_bound->add_option("--an", bound_args.an, "Constant term (constant-term method)");
  add_format_option(cmd_bound, bound_args.format);

  std::string check_coeffs;
  std::string check_format = "text";
  CLI::App* cmd_check = app.add_subcommand("check", "Run the coefficient checks on a monic polynomial");
  cmd_check->add_option("--coeffs", check_coeffs, "a_0,...,a_n leading-first; a_0 must be 1")->required();
  add_format_option(cmd_check, check_format);

  int chains_n = 0;
  std::string chains_format = "text";
  CLI::App* cmd_chains =
      app.add_subcommand("chains", "Count binary chains containing \"11\" or ending in 1");
  cmd_chains->add_option("--n", chains_n, "Chain length (>= 2)")->required();
  add_format_option(cmd_chains, chains_format);

  std::string family_rs;
  std::string family_format = "text";
  CLI::App* cmd_family =
      app.add_subcommand("family", "Build prod (x^2 - r_j^2), the even polynomial with roots +-r_j");
  cmd_family->add_option("--rs", family_rs, "Comma-separated nonzero r_1,...,r_k")->required();
  add_format_option(cmd_family, family_format);

  int multiplier_m = 0;
  std::string multiplier_format = "text";
  CLI::App* cmd_multiplier =
      app.add_subcommand("multiplier", "Build the degree-m chain multiplier with roots in {-1, +1}");
  cmd_multiplier->add_option("--m", multiplier_m, "Degree (>= 1)")->required();
  add_format_option(cmd_multiplier, multiplier_format);

  VerifyArgs verify_args;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Re-certify the inequalities and root bound on a brute-force range");
  cmd_verify->add_option("--n-max", verify_args.n_max, "Largest degree to sweep")->required();
  cmd_verify->add_option("--radius", verify_args.radius, "Root radius of the sweep")->required();
  cmd_verify->add_option("--budget", verify_args.budget, "Node budget")->capture_default_str();
  add_format_option(cmd_verify, verify_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(enum_args);
    if (cmd_bound->parsed()) return run_bound(bound_args);
    if (cmd_check->parsed()) return run_check(check_coeffs, check_format);
    if (cmd_chains->parsed()) return run_chains(chains_n, chains_format);
    if (cmd_family->parsed()) return run_family(family_rs, family_format);
    if (cmd_multiplier->parsed()) return run_multiplier(multiplier_m, multiplier_format);
    if (cmd_verify->parsed()) return run_verify(verify_args);
  } catch (const introots::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::range_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
