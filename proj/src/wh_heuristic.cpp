#include "hypercurv/wh.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <limits>

namespace hypercurv {

namespace {

constexpr double kTol = 1e-12;

struct Hop {
  EdgeId edge;
  VertexId from;
  VertexId to;
};

struct Parcel {
  std::int64_t units;
  std::vector<Hop> route;
  std::size_t next = 0;
};

// Shortest hyperedge route from `from` to `to`. Each hop jumps to the
// smallest-id vertex one step closer through the smallest-id shared edge.
std::vector<Hop> route(const Hypergraph& g, VertexId from, VertexId to) {
  std::vector<Hop> out;
  VertexId cur = from;
  while (cur != to) {
    const int d = g.distance(cur, to);
    Hop best{-1, cur, -1};
    for (EdgeId e : g.incident_edges(cur)) {
      for (VertexId w : g.edge(e)) {
        if (w == cur || g.distance(w, to) != d - 1) continue;
        if (best.edge < 0 || w < best.to || (w == best.to && e < best.edge)) best = {e, cur, w};
      }
    }
    out.push_back(best);
    cur = best.to;
  }
  return out;
}

struct Step {
  EdgeId edge;
  std::vector<std::int64_t> delta;  // dense, sums to zero
};

std::int64_t half_l1(const std::vector<std::int64_t>& d) {
  std::int64_t s = 0;
  for (auto x : d) s += x < 0 ? -x : x;
  return s / 2;
}

class CostTable {
 public:
  CostTable(const ConcaveCost& h, std::int64_t denom) : h_(h), denom_(denom) {}
  double operator()(std::int64_t m) const { return m == 0 ? 0.0 : h_.eval(Rational(m, denom_)); }

 private:
  const ConcaveCost& h_;
  std::int64_t denom_;
};

double total(const std::vector<Step>& steps, const CostTable& cost) {
  double t = 0;
  for (const auto& s : steps) t += cost(half_l1(s.delta));
  return t;
}

// The state before step i, shifted by `shift` for steps in [lo, hi), must
// stay nonnegative.
bool shift_feasible(const Units& start, const std::vector<Step>& steps, std::size_t lo,
                    std::size_t hi, const std::vector<std::int64_t>& shift) {
  Units s = start;
  for (std::size_t i = 0; i < hi; ++i) {
    if (i >= lo) {
      for (std::size_t v = 0; v < s.size(); ++v) {
        if (s[v] + shift[v] < 0) return false;
      }
    }
    for (std::size_t v = 0; v < s.size(); ++v) s[v] += steps[i].delta[v];
  }
  return true;
}

// Merges pairs of steps on the same hyperedge while that lowers the cost.
void merge_steps(const Units& start, std::vector<Step>& steps, const CostTable& cost) {
  bool improved = true;
  while (improved) {
    improved = false;
    steps.erase(std::remove_if(steps.begin(), steps.end(), [](const Step& s) { return half_l1(s.delta) == 0; }),
                steps.end());
    for (std::size_t i = 0; i < steps.size() && !improved; ++i) {
      for (std::size_t j = i + 1; j < steps.size() && !improved; ++j) {
        if (steps[i].edge != steps[j].edge) continue;
        std::vector<std::int64_t> merged(steps[i].delta);
        for (std::size_t v = 0; v < merged.size(); ++v) merged[v] += steps[j].delta[v];
        const double gain = cost(half_l1(steps[i].delta)) + cost(half_l1(steps[j].delta)) - cost(half_l1(merged));
        if (gain <= kTol) continue;
        // Pull step j forward to i: states i+1..j see +delta_j early.
        if (shift_feasible(start, steps, i + 1, j + 1, steps[j].delta)) {
          steps[i].delta = merged;
          steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(j));
          improved = true;
          break;
        }
        // Push step i back to j: states i+1..j miss delta_i.
        std::vector<std::int64_t> neg(steps[i].delta);
        for (auto& x : neg) x = -x;
        if (shift_feasible(start, steps, i + 1, j + 1, neg)) {
          steps[j].delta = merged;
          steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i));
          improved = true;
          break;
        }
      }
    }
  }
}

// Moves parcels hop by hop; each step serves the hyperedge with the most
// mass waiting on it.
std::vector<Step> batch(std::size_t n, std::vector<Parcel> parcels) {
  std::vector<Step> steps;
  while (true) {
    std::map<EdgeId, std::int64_t> waiting;
    for (const auto& p : parcels) {
      if (p.next < p.route.size()) waiting[p.route[p.next].edge] += p.units;
    }
    if (waiting.empty()) break;
    EdgeId best = waiting.begin()->first;
    for (const auto& [e, m] : waiting) {
      if (m > waiting[best]) best = e;
    }
    Step s{best, std::vector<std::int64_t>(n, 0)};
    for (auto& p : parcels) {
      if (p.next < p.route.size() && p.route[p.next].edge == best) {
        s.delta[p.route[p.next].from] -= p.units;
        s.delta[p.route[p.next].to] += p.units;
        ++p.next;
      }
    }
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace

WhResult wh_heuristic(const Hypergraph& g, const ConcaveCost& h, const ProbMeasure& mu,
                      const ProbMeasure& nu) {
  g.require_valid();
  std::vector<ProbMeasure> both{mu, nu};
  const BigInt big = common_denominator(both);
  if (big > 1'000'000'000) throw Error(ErrorCode::InfeasibleQuantization, "common denominator too large");
  const auto denom = big.convert_to<std::int64_t>();
  const std::size_t n = g.num_vertices();
  const Units a = mu.to_units(n, denom);
  const Units b = nu.to_units(n, denom);
  const UnitTransport t = transport_units(g, a, b);

  std::vector<Parcel> parcels;
  for (const auto& f : t.flows) parcels.push_back({f.units, route(g, f.from, f.to)});

  const CostTable cost(h, denom);
  std::vector<Step> steps = batch(n, parcels);
  merge_steps(a, steps, cost);

  WhResult out;
  out.denominator = denom;
  out.lower_bound = h.h1() * static_cast<double>(t.cost) / static_cast<double>(denom);
  out.optimality = Optimality::heuristic_upper_bound;
  out.plan.start = mu;
  out.plan.end = nu;
  for (const auto& s : steps) {
    SignedDelta::Entries delta;
    for (std::size_t v = 0; v < n; ++v) {
      if (s.delta[v] != 0) delta[static_cast<VertexId>(v)] = Rational(s.delta[v], denom);
    }
    out.plan.steps.push_back({s.edge, canonical_moves(SignedDelta(delta))});
  }
  out.value = total(steps, cost);
  return out;
}

WhBounds wh_bounds(const Hypergraph& g, const ConcaveCost& h, const ProbMeasure& mu,
                   const ProbMeasure& nu) {
  const W1Result w = w1(g, mu, nu);
  WhBounds out;
  if (w.value == 0) return out;
  out.lower = h.h1() * to_double(w.value);
  double per_hop = 0;
  for (const auto& [pair, mass] : w.coupling.entries) {
    if (pair.first != pair.second) per_hop += g.distance(pair.first, pair.second) * h.eval(mass);
  }
  out.upper = std::min(per_hop, wh_heuristic(g, h, mu, nu).value);
  return out;
}

}  // namespace hypercurv
