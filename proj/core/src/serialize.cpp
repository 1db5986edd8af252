#include "introots/serialize.hpp"

#include <json.hpp>

namespace introots {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_value(const Int& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();
}

ordered_json int_array(const std::vector<Int>& xs) {
  ordered_json a = ordered_json::array();
  for (const Int& x : xs) a.push_back(int_value(x));
  return a;
}

ordered_json poly_object(const Polynomial& p, const RootMultiset* roots) {
  ordered_json o;
  o["degree"] = p.degree();
  o["coeffs"] = int_array(p.coefficients());
  if (roots != nullptr) o["roots"] = int_array(roots->values());
  return o;
}

ordered_json certificate_object(const BoundCertificate& cert) {
  ordered_json o;
  o["radius"] = cert.radius ? ordered_json(cert.radius->str()) : ordered_json("infeasible");
  o["method"] = std::string(method_name(cert.method));
  if (cert.alpha_squared) o["alpha_squared"] = cert.alpha_squared->str();
  ordered_json inputs;
  for (const auto& [key, value] : cert.inputs) inputs[key] = value.str();
  o["inputs"] = std::move(inputs);
  return o;
}

std::string dump(const ordered_json& o) { return o.dump(2); }

} // namespace

std::string to_json(const Polynomial& p) { return dump(poly_object(p, nullptr)); }

std::string to_json(const Polynomial& p, const RootMultiset& roots) {
  return dump(poly_object(p, &roots));
}

std::string to_json(const CheckReport& report) {
  ordered_json o;
  o["pass"] = report.all_pass();
  ordered_json checks = ordered_json::array();
  for (const CheckVerdict& v : report.verdicts) {
    ordered_json c;
    c["name"] = v.check;
    c["index"] = v.index;
    c["pass"] = v.pass;
    c["lhs"] = v.lhs.str();
    c["rhs"] = v.rhs.str();
    checks.push_back(std::move(c));
  }
  o["checks"] = std::move(checks);
  return dump(o);
}

std::string to_json(const BoundCertificate& cert) { return dump(certificate_object(cert)); }

std::string to_json(const EnumerationResult& result) {
  ordered_json o;
  o["status"] = std::string(status_name(result.status));
  o["radius"] =
      result.radius_used.radius ? ordered_json(result.radius_used.radius->str()) : ordered_json("infeasible");
  o["method"] = std::string(method_name(result.radius_used.method));
  o["nodes"] = result.nodes_visited;
  ordered_json solutions = ordered_json::array();
  for (const Solution& s : result.solutions) solutions.push_back(poly_object(s.poly, &s.roots));
  o["solutions"] = std::move(solutions);
  return dump(o);
}

std::string to_json(const ChainCount& count) {
  ordered_json o;
  o["n"] = count.n;
  o["good"] = count.good.str();
  o["total"] = count.total.str();
  o["ratio"] = chain_ratio(count);
  return dump(o);
}

std::string to_json(const SweepSummary& summary) {
  ordered_json o;
  o["n_max"] = summary.n_max;
  o["radius"] = summary.radius.str();
  o["polynomials"] = summary.polynomials;
  o["verdicts"] = summary.verdicts;
  o["violations"] = summary.violations;
  if (summary.first_violation) {
    const SweepViolation& v = *summary.first_violation;
    ordered_json c;
    c["n"] = v.n;
    c["roots"] = int_array(v.roots.values());
    c["coeffs"] = int_array(v.poly.coefficients());
    c["check"] = v.check;
    c["index"] = v.index;
    c["lhs"] = v.lhs.str();
    c["rhs"] = v.rhs.str();
    o["first_counterexample"] = std::move(c);
  }
  return dump(o);
}

} // namespace introots
