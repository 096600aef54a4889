#include "hypercurv/wh.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <set>

namespace hypercurv {

namespace {

constexpr std::size_t kMaxPaths = 200'000;

struct WeightedPath {
  std::vector<VertexId> vertices;  // x_0 .. x_I
  Rational weight;
};

// Per-step couplings pi_i as sparse maps, stay-put mass on the diagonal.
using StepCoupling = std::map<std::pair<VertexId, VertexId>, Rational>;

std::vector<StepCoupling> step_couplings(const Hypergraph& g, const TransportPlan& plan,
                                         std::vector<ProbMeasure>& xi) {
  xi = intermediates(g, plan);
  std::vector<StepCoupling> out;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    StepCoupling pi;
    std::map<VertexId, Rational> outflow;
    for (const Move& mv : plan.steps[i].moves) {
      pi[{mv.from, mv.to}] += mv.mass;
      outflow[mv.from] += mv.mass;
    }
    for (const auto& [v, w] : xi[i].weights()) {
      Rational stay = w - (outflow.count(v) ? outflow[v] : Rational(0));
      if (stay > 0) pi[{v, v}] = stay;
    }
    out.push_back(std::move(pi));
  }
  return out;
}

// The path measure of the glued Markov chain: every sequence of positive
// arcs, weighted by xi_0(x_0) * prod pi_i(x_{i-1}, x_i) / xi_{i-1}(x_{i-1}).
std::vector<WeightedPath> path_measure(const Hypergraph& g, const TransportPlan& plan) {
  std::vector<ProbMeasure> xi;
  const auto pis = step_couplings(g, plan, xi);
  std::vector<std::map<VertexId, std::vector<std::pair<VertexId, Rational>>>> out_arcs(pis.size());
  for (std::size_t i = 0; i < pis.size(); ++i) {
    for (const auto& [arc, m] : pis[i]) out_arcs[i][arc.first].emplace_back(arc.second, m);
  }
  std::vector<WeightedPath> paths;
  for (const auto& [x, w] : plan.start.weights()) paths.push_back({{x}, w});
  for (std::size_t i = 0; i < pis.size(); ++i) {
    std::vector<WeightedPath> next;
    for (const auto& p : paths) {
      const VertexId u = p.vertices.back();
      const Rational held = xi[i].at(u);
      for (const auto& [v, m] : out_arcs[i][u]) {
        WeightedPath q = p;
        q.vertices.push_back(v);
        q.weight = p.weight * m / held;
        next.push_back(std::move(q));
        if (next.size() > kMaxPaths) throw Error(ErrorCode::InvalidPlan, "too many transport paths");
      }
    }
    paths = std::move(next);
  }
  return paths;
}

bool minimal_displacement(const TransportStep& step) {
  std::set<VertexId> senders, receivers;
  for (const Move& mv : step.moves) {
    senders.insert(mv.from);
    receivers.insert(mv.to);
  }
  return std::none_of(senders.begin(), senders.end(), [&](VertexId v) { return receivers.count(v) > 0; });
}

// sum_i h(C(pi_i)) for the plan induced by `paths`.
double c_cost(const ConcaveCost& h, const std::vector<WeightedPath>& paths, std::size_t steps) {
  std::vector<Rational> c(steps, Rational(0));
  for (const auto& p : paths) {
    for (std::size_t i = 0; i < steps; ++i) {
      if (p.vertices[i] != p.vertices[i + 1]) c[i] += p.weight;
    }
  }
  double total = 0;
  for (const auto& m : c) total += h.eval(m);
  return total;
}

}  // namespace

Coupling glue(const Hypergraph& g, const TransportPlan& plan) {
  Coupling out;
  out.source = plan.start;
  out.target = plan.end;
  for (const auto& p : path_measure(g, plan)) {
    out.entries[{p.vertices.front(), p.vertices.back()}] += p.weight;
  }
  return out;
}

std::map<std::pair<VertexId, VertexId>, std::size_t> transport_path_counts(const Hypergraph& g,
                                                                            const TransportPlan& plan) {
  std::map<std::pair<VertexId, VertexId>, std::size_t> out;
  for (const auto& p : path_measure(g, plan)) ++out[{p.vertices.front(), p.vertices.back()}];
  return out;
}

TransportPlan normalize_plan(const Hypergraph& g, const ConcaveCost& h, const TransportPlan& plan,
                             const Coupling& coupling) {
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    if (!minimal_displacement(plan.steps[i])) {
      throw Error(ErrorCode::InvalidPlan,
                  "step " + std::to_string(i + 1) + " has a vertex that both sends and receives");
    }
  }
  std::vector<WeightedPath> paths = path_measure(g, plan);

  std::map<std::pair<VertexId, VertexId>, Rational> glued;
  for (const auto& p : paths) glued[{p.vertices.front(), p.vertices.back()}] += p.weight;
  std::map<std::pair<VertexId, VertexId>, Rational> expected;
  for (const auto& [pair, m] : coupling.entries) {
    if (m != 0) expected[pair] = m;
  }
  if (glued != expected) {
    throw Error(ErrorCode::NotAssociated, "gluing the steps of the plan does not give the coupling");
  }

  const std::size_t steps = plan.steps.size();
  auto by_pair = [](const WeightedPath& a, const WeightedPath& b) {
    auto ka = std::make_pair(a.vertices.front(), a.vertices.back());
    auto kb = std::make_pair(b.vertices.front(), b.vertices.back());
    if (ka != kb) return ka < kb;
    return a.vertices < b.vertices;
  };
  std::sort(paths.begin(), paths.end(), by_pair);

  bool changed = false;
  while (true) {
    std::size_t first = paths.size();
    for (std::size_t k = 0; k + 1 < paths.size(); ++k) {
      if (paths[k].vertices.front() == paths[k + 1].vertices.front() &&
          paths[k].vertices.back() == paths[k + 1].vertices.back()) {
        first = k;
        break;
      }
    }
    if (first == paths.size()) break;
    changed = true;
    // s = t_1 empties path 1 onto path 2; s = -t_2 empties path 2 onto path 1.
    std::vector<WeightedPath> onto_second = paths;
    onto_second[first + 1].weight += onto_second[first].weight;
    onto_second.erase(onto_second.begin() + static_cast<std::ptrdiff_t>(first));
    std::vector<WeightedPath> onto_first = paths;
    onto_first[first].weight += onto_first[first + 1].weight;
    onto_first.erase(onto_first.begin() + static_cast<std::ptrdiff_t>(first + 1));
    if (c_cost(h, onto_first, steps) < c_cost(h, onto_second, steps) - 1e-12) {
      paths = std::move(onto_first);
    } else {
      paths = std::move(onto_second);
    }
  }
  if (!changed) return plan;

  TransportPlan out{plan.start, plan.end, {}};
  for (std::size_t i = 0; i < steps; ++i) {
    std::map<std::pair<VertexId, VertexId>, Rational> arcs;
    for (const auto& p : paths) {
      if (p.vertices[i] != p.vertices[i + 1]) arcs[{p.vertices[i], p.vertices[i + 1]}] += p.weight;
    }
    if (arcs.empty()) continue;
    TransportStep step{plan.steps[i].edge, {}};
    for (const auto& [arc, m] : arcs) step.moves.push_back({arc.first, arc.second, m});
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace hypercurv
