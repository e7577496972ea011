#pragma once

#include <json.hpp>

#include "schurcalc/soc.hpp"

namespace schurcalc {

using Json = nlohmann::json;

/// BigInt as a JSON number when it fits in int64, else as a decimal string.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

/// {rank, terms: [{weight, coeff}]}
Json to_json(const RepElement& a);
RepElement rep_from_json(const Json& j);

/// {kind: "zero", repeat} or {kind: "nonzero", degree, beta, multiplicity, dim}
Json to_json(const BwbOutcome& o);
BwbOutcome outcome_from_json(const Json& j);

/// {d, groups: [{degree, rep, dim}]}
Json to_json(const GradedCohomology& h);

/// {check, verdict: "pass"|"fail", d, k?, alpha?, beta?, hom_dimension,
///  conditions: [{q, weight, k_weight?, must_vanish, outcome}], cohomology?, note?}
Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

}  // namespace schurcalc
