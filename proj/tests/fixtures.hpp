#pragma once

#include "hypercurv/hypergraph.hpp"
#include "hypercurv/measure.hpp"
#include "hypercurv/rational.hpp"
#include "hypercurv/transport_plan.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace fixture {

using namespace hypercurv;

struct LabelMove {
  std::string from;
  std::string to;
  Rational mass;
};

// Steps given as (hyperedge labels, moves); the hyperedge is looked up by
// its vertex set.
inline TransportPlan make_plan(const Hypergraph& g, ProbMeasure start, ProbMeasure end,
                               const std::vector<std::pair<std::vector<std::string>, std::vector<LabelMove>>>& steps) {
  TransportPlan plan{std::move(start), std::move(end), {}};
  for (const auto& [labels, moves] : steps) {
    EdgeId found = -1;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      auto verts = g.edge(static_cast<EdgeId>(e));
      if (verts.size() != labels.size()) continue;
      bool all = true;
      for (const auto& l : labels) all = all && g.edge_contains(static_cast<EdgeId>(e), g.id(l));
      if (all) found = static_cast<EdgeId>(e);
    }
    TransportStep step{found, {}};
    for (const auto& m : moves) step.moves.push_back({g.id(m.from), g.id(m.to), m.mass});
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

inline Hypergraph grid9() { return generate(Family::grid9); }

// Blocks combined as much as possible: cyan, orange, green, red.
inline TransportPlan grid_combined_plan(const Hypergraph& g, const Rational& a) {
  const Rational b = 1 - a;
  return make_plan(g, lazy_random_walk(g, g.id("x"), a), lazy_random_walk(g, g.id("y"), a),
                   {{{"v2", "x", "v6", "v3"}, {{"v3", "x", b / 8}}},
                    {{"v1", "v4", "x", "v2"}, {{"v2", "v4", b / 8}, {"v1", "v4", b / 8}}},
                    {{"x", "v8", "v9", "v6"}, {{"v6", "v8", b / 8}, {"v9", "v8", b / 8}}},
                    {{"v4", "y", "v8", "x"},
                     {{"x", "y", a - 5 * b / 24}, {"v4", "y", b / 24}, {"v8", "y", b / 24}}}});
}

// Same block order with equal loads 5b/24 on the first three blocks.
inline TransportPlan grid_balanced_plan(const Hypergraph& g, const Rational& a) {
  const Rational b = 1 - a;
  return make_plan(g, lazy_random_walk(g, g.id("x"), a), lazy_random_walk(g, g.id("y"), a),
                   {{{"v2", "x", "v6", "v3"}, {{"v3", "x", b / 8}, {"v2", "x", b / 24}, {"v6", "x", b / 24}}},
                    {{"v1", "v4", "x", "v2"}, {{"v2", "v4", b / 12}, {"v1", "v4", b / 8}}},
                    {{"x", "v8", "v9", "v6"}, {{"v6", "v8", b / 12}, {"v9", "v8", b / 8}}},
                    {{"v4", "y", "v8", "x"}, {{"x", "y", a - b / 8}}}});
}

inline Hypergraph ladder(int d) { return generate(Family::ladder, d); }

// Ladder of length 3, x = a0, y = a3: the top row travels on its own.
inline TransportPlan ladder_route_a(const Hypergraph& g, const Rational& a) {
  const Rational b = 1 - a;
  return make_plan(g, lazy_random_walk(g, g.id("a0"), a), lazy_random_walk(g, g.id("a3"), a),
                   {{{"b0", "b1"}, {{"b0", "b1", b / 2}}},
                    {{"b1", "b2"}, {{"b1", "b2", b / 2}}},
                    {{"b2", "b3"}, {{"b2", "b3", b / 2}}},
                    {{"a0", "a1"}, {{"a0", "a1", a}}},
                    {{"a1", "a2"}, {{"a1", "a2", a + b / 2}}},
                    {{"a2", "a3"}, {{"a2", "a3", a}}}});
}

// The top-row mass drops onto the bottom row and rides along.
inline TransportPlan ladder_route_b(const Hypergraph& g, const Rational& a) {
  const Rational b = 1 - a;
  return make_plan(g, lazy_random_walk(g, g.id("a0"), a), lazy_random_walk(g, g.id("a3"), a),
                   {{{"a0", "b0"}, {{"b0", "a0", b / 2}}},
                    {{"a0", "a1"}, {{"a0", "a1", a + b / 2}}},
                    {{"a1", "a2"}, {{"a1", "a2", Rational(1)}}},
                    {{"a2", "a3"}, {{"a2", "a3", a + b / 2}}},
                    {{"a3", "b3"}, {{"a3", "b3", b / 2}}}});
}

}  // namespace fixture
