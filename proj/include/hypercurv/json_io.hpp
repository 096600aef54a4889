#pragma once

#include "hypercurv/concave_cost.hpp"
#include "hypercurv/hypergraph.hpp"
#include "hypercurv/measure.hpp"
#include "hypercurv/transport_plan.hpp"

#include <json.hpp>

#include <string_view>

namespace hypercurv {

using Json = nlohmann::ordered_json;

// {"family": "log", "a": "1"}; tabulated h is {"family": "tabulated",
// "values": [h(0), h(1/N), ..., h(1)]}. Throws InvalidCost / ParseError.
ConcaveCost cost_from_json(const Json& j);
ConcaveCost parse_cost(std::string_view text);
Json to_json(const ConcaveCost& h);

// {"label": "p/q", ...}
ProbMeasure measure_from_json(const Hypergraph& g, const Json& j);
Json to_json(const Hypergraph& g, const ProbMeasure& m);

// {"start": {...}, "end": {...}, "steps": [{"edge": 0, "moves": [["u", "v", "1/2"]]}]}
TransportPlan plan_from_json(const Hypergraph& g, const Json& j);
Json to_json(const Hypergraph& g, const TransportPlan& plan);

Json parse_json(std::string_view text);

}  // namespace hypercurv
