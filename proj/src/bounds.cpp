#include "hypercurv/bounds.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hypercurv {

CollapseMap collapse_map(const Hypergraph& g, VertexId x, VertexId y) {
  g.require_valid();
  const int d = g.distance(x, y);
  if (d < 2) {
    throw Error(ErrorCode::PairTooClose, "collapse map needs d(x, y) >= 2, got " + std::to_string(d));
  }
  CollapseMap f;
  f.length = d;
  const std::size_t n = g.num_vertices();
  f.value.resize(n);
  f.part.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    // 2 d(v, x) < d and 2 d(v, y) < d cannot both hold.
    if (2 * g.distance(v, x) < d) {
      f.part[i] = 1;
      f.value[i] = g.distance(x, v);
    } else if (2 * g.distance(v, y) < d) {
      f.part[i] = 2;
      f.value[i] = d - g.distance(v, y);
    } else {
      f.part[i] = 3;
      f.value[i] = d / 2;
    }
  }
  if (!is_one_lipschitz(g, f.value)) {
    throw Error(ErrorCode::InvalidHypergraph, "collapse map is not 1-Lipschitz");
  }
  return f;
}

bool is_one_lipschitz(const Hypergraph& g, const std::vector<int>& f) {
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(f[i] - f[j]) > g.distance(static_cast<VertexId>(i), static_cast<VertexId>(j))) {
        return false;
      }
    }
  }
  return true;
}

PushedPlan push_forward(const Hypergraph& g, const CollapseMap& f, const TransportPlan& plan) {
  PushedPlan out{generate(Family::path, f.length), {}};
  const Hypergraph& line = out.line;
  auto image = [&](VertexId v) { return line.id(std::to_string(f.value[static_cast<std::size_t>(v)])); };
  auto push_measure = [&](const ProbMeasure& m) {
    ProbMeasure::Weights w;
    for (const auto& [v, mass] : m.weights()) w[image(v)] += mass;
    return ProbMeasure(line, std::move(w));
  };
  out.plan.start = push_measure(plan.start);
  out.plan.end = push_measure(plan.end);
  for (const auto& step : plan.steps) {
    std::map<std::pair<VertexId, VertexId>, Rational> moves;
    int lo = f.length;
    for (VertexId v : g.edge(step.edge)) lo = std::min(lo, f.value[static_cast<std::size_t>(v)]);
    for (const Move& mv : step.moves) {
      const VertexId a = image(mv.from);
      const VertexId b = image(mv.to);
      if (a != b) moves[{a, b}] += mv.mass;
    }
    if (moves.empty()) continue;
    // Line edge k joins k and k+1; F is 1-Lipschitz so a hyperedge spans at most one.
    const auto edge = static_cast<EdgeId>(std::min(lo, f.length - 1));
    TransportStep s{edge, {}};
    for (const auto& [arc, m] : moves) s.moves.push_back({arc.first, arc.second, m});
    out.plan.steps.push_back(std::move(s));
  }
  return out;
}

double wh_line_lower_bound(const ConcaveCost& h, const Rational& alpha, int d) {
  if (d < 2) throw Error(ErrorCode::BadParams, "line lower bound needs d >= 2");
  return 2 * h.eval(alpha) + (d - 2) * h.h1();
}

DiameterBound bonnet_myers_bound(const ConcaveCost& h, double kappa, BoundKind kind) {
  if (!(kappa > 0)) throw Error(ErrorCode::NonpositiveKappa, "curvature lower bound must be positive");
  DiameterBound out;
  double x = 2 / kappa;
  if (kind == BoundKind::hypergraph_hlly) {
    x *= h.hp1() / h.h1();
    if (h.hp1() == 0) {
      out.vacuous = true;
      out.warning = "h'(1) = 0: a positive h-LLY lower bound cannot hold, the bound is vacuous";
    }
  }
  out.bound = static_cast<std::int64_t>(std::floor(x + 1e-9));
  return out;
}

std::int64_t vertex_count_bound(const ConcaveCost& h, double kappa, int max_degree) {
  if (!(kappa > 0)) throw Error(ErrorCode::NonpositiveKappa, "curvature lower bound must be positive");
  if (max_degree < 1) throw Error(ErrorCode::BadParams, "max degree must be at least 1");
  const auto terms = static_cast<std::int64_t>(std::floor(2 * h.hp1() / (h.h1() * kappa) + 1e-9));
  double total = 1;
  double power = 1;
  double product = 1;
  for (std::int64_t j = 1; j <= terms; ++j) {
    power *= max_degree;
    if (j > 1) product *= std::max(0.0, 1 - kappa * static_cast<double>(j - 1) / 2);
    if (product == 0) break;
    total += power * product;
  }
  return static_cast<std::int64_t>(std::floor(total + 1e-9));
}

GammaSets gamma_sets(const Hypergraph& g, VertexId x, VertexId y) {
  if (x == y) throw Error(ErrorCode::SameVertex, "Gamma sets need two distinct vertices");
  GammaSets out;
  const int d = g.distance(x, y);
  for (VertexId v : g.neighbors(y)) {
    if (g.distance(x, v) == d + 1) out.plus.push_back(v);
    if (g.distance(x, v) == d - 1) out.minus.push_back(v);
  }
  return out;
}

double gamma_curvature_bound(const Hypergraph& g, VertexId x, VertexId y) {
  const GammaSets s = gamma_sets(g, x, y);
  const double diff = static_cast<double>(s.minus.size()) - static_cast<double>(s.plus.size());
  return (1 + diff / g.degree(y)) / g.distance(x, y);
}

}  // namespace hypercurv
