#pragma once

#include <string>

#include "introots/bounds.hpp"
#include "introots/chains.hpp"
#include "introots/enumeration.hpp"
#include "introots/inequalities.hpp"
#include "introots/verify.hpp"

namespace introots {

// JSON renderers with a stable field layout, suitable for scripting:
// identical inputs produce byte-identical output. Integers outside int64
// range serialize as decimal strings so consumers never lose precision;
// "radius", "lhs", "rhs", "good" and "total" are always decimal strings.

/// {"degree": n, "coeffs": [a_0, ..., a_n]}
std::string to_json(const Polynomial& p);
/// Same, plus "roots": [x_1, ..., x_n].
std::string to_json(const Polynomial& p, const RootMultiset& roots);
/// {"pass": bool, "checks": [{"name", "index", "pass", "lhs", "rhs"}...]}
std::string to_json(const CheckReport& report);
/// {"radius": str | "infeasible", "method": str, "alpha_squared"?: str, "inputs": {...}}
std::string to_json(const BoundCertificate& cert);
/// {"status": str, "radius": str | "infeasible", "method": str, "nodes": int,
///  "solutions": [polynomial objects with roots]}
std::string to_json(const EnumerationResult& result);
/// {"n": int, "good": str, "total": str, "ratio": float}
std::string to_json(const ChainCount& count);
/// {"n_max", "radius", "polynomials", "verdicts", "violations",
///  "first_counterexample"?: {...}}
std::string to_json(const SweepSummary& summary);

} // namespace introots
