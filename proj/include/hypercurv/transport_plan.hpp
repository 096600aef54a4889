#pragma once

#include "hypercurv/concave_cost.hpp"
#include "hypercurv/hypergraph.hpp"
#include "hypercurv/measure.hpp"
#include "hypercurv/rational.hpp"

#include <vector>

namespace hypercurv {

struct Move {
  VertexId from;
  VertexId to;
  Rational mass;

  friend bool operator==(const Move&, const Move&) = default;
};

/// One step of a stepwise transport: every move stays inside `edge` and all
/// moves are applied simultaneously to the incoming measure.
struct TransportStep {
  EdgeId edge = 0;
  std::vector<Move> moves;

  Rational moved_mass() const;

  friend bool operator==(const TransportStep&, const TransportStep&) = default;
};

struct TransportPlan {
  ProbMeasure start;
  ProbMeasure end;
  std::vector<TransportStep> steps;
};

// xi_0 = start, ..., xi_I. Throws StepLeavesHyperedge, InvalidPlan (bad
// move: non-positive mass or from == to), NegativeIntermediateMass (a vertex
// sends more than it holds) and EndpointMismatch.
std::vector<ProbMeasure> intermediates(const Hypergraph& g, const TransportPlan& plan);

// Mass displaced by each step, i.e. W_1 between consecutive intermediates.
std::vector<Rational> step_masses(const Hypergraph& g, const TransportPlan& plan);

// sum_i h(W_1(xi_{i-1}, xi_i)); recomputed from the moves.
double plan_cost(const Hypergraph& g, const ConcaveCost& h, const TransportPlan& plan);

// Minimal-displacement moves realizing `after - before` inside one edge:
// senders and receivers sorted by id, matched north-west-corner style.
std::vector<Move> canonical_moves(const SignedDelta& delta);

}  // namespace hypercurv
