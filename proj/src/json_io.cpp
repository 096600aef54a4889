#include "hypercurv/json_io.hpp"

#include "hypercurv/error.hpp"

namespace hypercurv {

namespace {

Rational rational_field(const Json& j, std::string_view what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::ParseError, std::string(what) + " must be a \"p/q\" string");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

ConcaveCost cost_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error(ErrorCode::InvalidCost, "h spec needs a \"family\" string");
  }
  const std::string family = j["family"].get<std::string>();
  if (family == "tabulated") {
    if (!j.contains("values") || !j["values"].is_array()) {
      throw Error(ErrorCode::InvalidCost, "tabulated h needs a \"values\" array");
    }
    std::vector<double> values;
    for (const auto& v : j["values"]) {
      if (!v.is_number()) throw Error(ErrorCode::InvalidCost, "tabulated values must be numbers");
      values.push_back(v.get<double>());
    }
    return ConcaveCost::tabulated(std::move(values));
  }
  if (!j.contains("a")) throw Error(ErrorCode::InvalidCost, "h spec needs a parameter \"a\"");
  const Rational a = rational_field(j["a"], "h parameter a");
  if (family == "linear") return ConcaveCost::linear(a);
  if (family == "log") return ConcaveCost::log(a);
  if (family == "truncation") return ConcaveCost::truncation(a);
  if (family == "trunc_log_combo") return ConcaveCost::trunc_log_combo(a);
  if (family == "power") return ConcaveCost::power(a);
  throw Error(ErrorCode::InvalidCost, "unknown h family '" + family + "'");
}

ConcaveCost parse_cost(std::string_view text) { return cost_from_json(parse_json(text)); }

Json to_json(const ConcaveCost& h) {
  Json j;
  j["family"] = std::string(to_string(h.family()));
  if (h.family() == CostFamily::tabulated) {
    j["values"] = h.table();
  } else if (h.family() != CostFamily::custom) {
    j["a"] = to_string(h.a());
  }
  return j;
}

ProbMeasure measure_from_json(const Hypergraph& g, const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "a measure is an object label -> \"p/q\"");
  ProbMeasure::Weights w;
  for (const auto& [label, value] : j.items()) {
    auto id = g.find(label);
    if (!id) {
      throw Error(ErrorCode::SupportOutsideVertexSet, "measure names unknown vertex '" + label + "'");
    }
    w[*id] += rational_field(value, "measure weight");
  }
  return ProbMeasure(g, std::move(w));
}

Json to_json(const Hypergraph& g, const ProbMeasure& m) {
  Json j = Json::object();
  for (const auto& [v, w] : m.weights()) j[g.label(v)] = to_string(w);
  return j;
}

TransportPlan plan_from_json(const Hypergraph& g, const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("end") || !j.contains("steps")) {
    throw Error(ErrorCode::ParseError, "a plan needs \"start\", \"end\" and \"steps\"");
  }
  TransportPlan plan;
  plan.start = measure_from_json(g, j["start"]);
  plan.end = measure_from_json(g, j["end"]);
  for (const auto& s : j["steps"]) {
    if (!s.contains("edge") || !s["edge"].is_number_integer() || !s.contains("moves")) {
      throw Error(ErrorCode::ParseError, "a step needs an integer \"edge\" and \"moves\"");
    }
    TransportStep step;
    step.edge = s["edge"].get<EdgeId>();
    for (const auto& mv : s["moves"]) {
      if (!mv.is_array() || mv.size() != 3 || !mv[0].is_string() || !mv[1].is_string()) {
        throw Error(ErrorCode::ParseError, "a move is [from, to, \"p/q\"]");
      }
      step.moves.push_back({g.id(mv[0].get<std::string>()), g.id(mv[1].get<std::string>()),
                            rational_field(mv[2], "move mass")});
    }
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

Json to_json(const Hypergraph& g, const TransportPlan& plan) {
  Json j;
  j["start"] = to_json(g, plan.start);
  j["end"] = to_json(g, plan.end);
  j["steps"] = Json::array();
  for (const auto& s : plan.steps) {
    Json moves = Json::array();
    for (const auto& mv : s.moves) moves.push_back({g.label(mv.from), g.label(mv.to), to_string(mv.mass)});
    j["steps"].push_back({{"edge", s.edge}, {"moves", moves}});
  }
  return j;
}

}  // namespace hypercurv
