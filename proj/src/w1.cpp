#include "hypercurv/w1.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <limits>

namespace hypercurv {

Rational Coupling::cost(const Hypergraph& h) const {
  Rational c = 0;
  for (const auto& [pair, mass] : entries) c += mass * h.distance(pair.first, pair.second);
  return c;
}

bool Coupling::has_marginals() const {
  std::map<VertexId, Rational> rows, cols;
  for (const auto& [pair, mass] : entries) {
    if (mass < 0) return false;
    rows[pair.first] += mass;
    cols[pair.second] += mass;
  }
  auto matches = [](const std::map<VertexId, Rational>& sums, const ProbMeasure& m) {
    for (const auto& [v, s] : sums) {
      if (s != m.at(v)) return false;
    }
    for (const auto& [v, w] : m.weights()) {
      auto it = sums.find(v);
      if (it == sums.end() || it->second != w) return false;
    }
    return true;
  };
  return matches(rows, source) && matches(cols, target);
}

// Successive shortest paths on the bipartite excess graph. Bellman-Ford is
// used for the path search since reverse residual arcs carry negative cost;
// the instances are a handful of vertices each.
UnitTransport transport_units(const Hypergraph& h, std::span<const std::int64_t> from,
                              std::span<const std::int64_t> to, bool with_potential) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t n = h.num_vertices();

  std::vector<VertexId> src, dst;
  std::vector<std::int64_t> supply, demand;
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t diff = from[v] - to[v];
    if (diff > 0) {
      src.push_back(static_cast<VertexId>(v));
      supply.push_back(diff);
    } else if (diff < 0) {
      dst.push_back(static_cast<VertexId>(v));
      demand.push_back(-diff);
    }
  }
  const std::size_t S = src.size();
  const std::size_t T = dst.size();

  std::vector<std::int64_t> cost(S * T);
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < T; ++j) cost[i * T + j] = h.distance(src[i], dst[j]);

  std::vector<std::int64_t> flow(S * T, 0);
  std::vector<std::int64_t> dist(S + T);
  std::vector<std::int64_t> pred(S + T);

  std::int64_t remaining = 0;
  for (auto s : supply) remaining += s;

  while (remaining > 0) {
    for (std::size_t i = 0; i < S; ++i) dist[i] = supply[i] > 0 ? 0 : kInf;
    for (std::size_t j = 0; j < T; ++j) dist[S + j] = kInf;
    std::fill(pred.begin(), pred.end(), -1);

    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < S; ++i) {
        if (dist[i] >= kInf) continue;
        for (std::size_t j = 0; j < T; ++j) {
          std::int64_t cand = dist[i] + cost[i * T + j];
          if (cand < dist[S + j]) {
            dist[S + j] = cand;
            pred[S + j] = static_cast<std::int64_t>(i);
            changed = true;
          }
        }
      }
      for (std::size_t j = 0; j < T; ++j) {
        if (dist[S + j] >= kInf) continue;
        for (std::size_t i = 0; i < S; ++i) {
          if (flow[i * T + j] == 0) continue;
          std::int64_t cand = dist[S + j] - cost[i * T + j];
          if (cand < dist[i]) {
            dist[i] = cand;
            pred[i] = static_cast<std::int64_t>(S + j);
            changed = true;
          }
        }
      }
    }

    std::size_t best = T;
    for (std::size_t j = 0; j < T; ++j) {
      if (demand[j] > 0 && dist[S + j] < kInf && (best == T || dist[S + j] < dist[S + best])) best = j;
    }
    if (best == T) throw Error(ErrorCode::NotConnected, "transport target unreachable");

    // Walk back to the originating source to find the bottleneck.
    std::int64_t push = demand[best];
    std::size_t node = S + best;
    while (true) {
      if (node >= S) {
        node = static_cast<std::size_t>(pred[node]);
      } else if (pred[node] < 0) {
        push = std::min(push, supply[node]);
        break;
      } else {
        std::size_t j = static_cast<std::size_t>(pred[node]) - S;
        push = std::min(push, flow[node * T + j]);
        node = S + j;
      }
    }
    node = S + best;
    demand[best] -= push;
    while (true) {
      if (node >= S) {
        std::size_t i = static_cast<std::size_t>(pred[node]);
        flow[i * T + (node - S)] += push;
        node = i;
      } else if (pred[node] < 0) {
        supply[node] -= push;
        break;
      } else {
        std::size_t j = static_cast<std::size_t>(pred[node]) - S;
        flow[node * T + j] -= push;
        node = S + j;
      }
    }
    remaining -= push;
  }

  UnitTransport out;
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t j = 0; j < T; ++j) {
      if (flow[i * T + j] > 0) {
        out.flows.push_back({src[i], dst[j], flow[i * T + j]});
        out.cost += flow[i * T + j] * cost[i * T + j];
      }
    }
  }

  if (with_potential) {
    out.potential.assign(n, 0);
    if (T > 0) {
      // Shortest-path potentials of the optimal residual graph give the
      // transport duals; extend them to every vertex by the c-transform.
      std::vector<std::int64_t> p(S + T, 0);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < S; ++i) {
          for (std::size_t j = 0; j < T; ++j) {
            if (p[i] + cost[i * T + j] < p[S + j]) {
              p[S + j] = p[i] + cost[i * T + j];
              changed = true;
            }
            if (flow[i * T + j] > 0 && p[S + j] - cost[i * T + j] < p[i]) {
              p[i] = p[S + j] - cost[i * T + j];
              changed = true;
            }
          }
        }
      }
      for (std::size_t w = 0; w < n; ++w) {
        std::int64_t best_val = kInf;
        for (std::size_t j = 0; j < T; ++j) {
          best_val = std::min(best_val, -p[S + j] + h.distance(static_cast<VertexId>(w), dst[j]));
        }
        out.potential[w] = best_val;
      }
    }
  }
  return out;
}

W1Result w1(const Hypergraph& h, const ProbMeasure& mu, const ProbMeasure& nu) {
  for (const auto* m : {&mu, &nu}) {
    for (const auto& [v, w] : m->weights()) {
      if (v < 0 || static_cast<std::size_t>(v) >= h.num_vertices()) {
        throw Error(ErrorCode::SupportOutsideVertexSet, "measure support outside vertex set");
      }
    }
  }
  h.require_valid();
  std::vector<ProbMeasure> both{mu, nu};
  BigInt big_d = common_denominator(both);
  if (big_d > std::numeric_limits<std::int64_t>::max() / 1024) {
    throw Error(ErrorCode::InfeasibleQuantization, "common denominator too large");
  }
  const auto d = big_d.convert_to<std::int64_t>();
  Units a = mu.to_units(h.num_vertices(), d);
  Units b = nu.to_units(h.num_vertices(), d);
  UnitTransport t = transport_units(h, a, b);

  W1Result r;
  r.value = Rational(t.cost, d);
  r.coupling.source = mu;
  r.coupling.target = nu;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    std::int64_t stay = std::min(a[v], b[v]);
    if (stay > 0) {
      r.coupling.entries[{static_cast<VertexId>(v), static_cast<VertexId>(v)}] = Rational(stay, d);
    }
  }
  for (const auto& f : t.flows) r.coupling.entries[{f.from, f.to}] += Rational(f.units, d);
  return r;
}

Rational within_edge_w1(const Hypergraph& h, const SignedDelta& delta, EdgeId edge) {
  if (edge < 0 || static_cast<std::size_t>(edge) >= h.num_edges()) {
    throw Error(ErrorCode::SupportOutsideEdge, "no hyperedge #" + std::to_string(edge));
  }
  for (const auto& [v, d] : delta.entries()) {
    if (!h.edge_contains(edge, v)) {
      throw Error(ErrorCode::SupportOutsideEdge,
                  "vertex '" + h.label(v) + "' is outside hyperedge #" + std::to_string(edge));
    }
  }
  return delta.half_l1();
}

}  // namespace hypercurv
