#pragma once

#include <json.hpp>

#include "ineq/gen.hpp"
#include "ineq/instances.hpp"
#include "ineq/trace.hpp"
#include "ineq/verdict.hpp"

namespace ineq {

using Json = nlohmann::json;

// Rationals serialize as canonical "num/den" strings ("num" when integral).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
Json line_to_json(const Line& l);
Line line_from_json(const Json& j);

Json matrix_to_json(const NonNegMatrix& m);  // {"n", "m", "entries": rows of strings}
NonNegMatrix matrix_from_json(const Json& j);

Json instance_to_json(const Instance& inst);  // tagged with "statement"
Instance instance_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

Json trace_to_json(const ProofTrace& t);
ProofTrace trace_from_json(const Json& j);

Json trace_verdict_to_json(const TraceVerdict& tv);

}  // namespace ineq
