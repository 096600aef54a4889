#include "hypercurv/transport_plan.hpp"

#include "hypercurv/error.hpp"
#include "hypercurv/w1.hpp"

#include <map>

namespace hypercurv {

Rational TransportStep::moved_mass() const {
  Rational m = 0;
  for (const auto& mv : moves) m += mv.mass;
  return m;
}

namespace {

std::string step_name(std::size_t i) { return "step " + std::to_string(i + 1); }

}  // namespace

std::vector<ProbMeasure> intermediates(const Hypergraph& g, const TransportPlan& plan) {
  std::vector<ProbMeasure> xi{plan.start};
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const TransportStep& step = plan.steps[i];
    if (step.edge < 0 || static_cast<std::size_t>(step.edge) >= g.num_edges()) {
      throw Error(ErrorCode::StepLeavesHyperedge,
                  step_name(i) + " names hyperedge #" + std::to_string(step.edge) +
                      " which does not exist");
    }
    std::map<VertexId, Rational> outflow;
    ProbMeasure::Weights next = xi.back().weights();
    for (const Move& mv : step.moves) {
      for (VertexId v : {mv.from, mv.to}) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices() || !g.edge_contains(step.edge, v)) {
          throw Error(ErrorCode::StepLeavesHyperedge,
                      step_name(i) + " touches a vertex outside hyperedge #" +
                          std::to_string(step.edge));
        }
      }
      if (mv.from == mv.to || mv.mass <= 0) {
        throw Error(ErrorCode::InvalidPlan,
                    step_name(i) + " has a move " + g.label(mv.from) + "->" + g.label(mv.to) +
                        " of mass " + to_string(mv.mass));
      }
      outflow[mv.from] += mv.mass;
      next[mv.from] -= mv.mass;
      next[mv.to] += mv.mass;
    }
    for (const auto& [v, out] : outflow) {
      if (out > xi.back().at(v)) {
        throw Error(ErrorCode::NegativeIntermediateMass,
                    step_name(i) + " sends " + to_string(out) + " from '" + g.label(v) +
                        "' which holds " + to_string(xi.back().at(v)));
      }
    }
    xi.emplace_back(g, std::move(next));
  }
  if (!(xi.back() == plan.end)) {
    throw Error(ErrorCode::EndpointMismatch, "the steps do not arrive at the stated end measure");
  }
  return xi;
}

std::vector<Rational> step_masses(const Hypergraph& g, const TransportPlan& plan) {
  const auto xi = intermediates(g, plan);
  std::vector<Rational> out;
  out.reserve(plan.steps.size());
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    out.push_back(within_edge_w1(g, SignedDelta::between(xi[i], xi[i + 1]), plan.steps[i].edge));
  }
  return out;
}

double plan_cost(const Hypergraph& g, const ConcaveCost& h, const TransportPlan& plan) {
  double total = 0;
  for (const Rational& m : step_masses(g, plan)) total += h.eval(m);
  return total;
}

std::vector<Move> canonical_moves(const SignedDelta& delta) {
  std::vector<std::pair<VertexId, Rational>> senders, receivers;
  for (const auto& [v, d] : delta.entries()) {
    if (d < 0) senders.emplace_back(v, -d);
    if (d > 0) receivers.emplace_back(v, d);
  }
  std::vector<Move> moves;
  std::size_t i = 0, j = 0;
  while (i < senders.size() && j < receivers.size()) {
    Rational m = senders[i].second < receivers[j].second ? senders[i].second : receivers[j].second;
    moves.push_back({senders[i].first, receivers[j].first, m});
    senders[i].second -= m;
    receivers[j].second -= m;
    if (senders[i].second == 0) ++i;
    if (receivers[j].second == 0) ++j;
  }
  return moves;
}

}  // namespace hypercurv
