#pragma once

#include "hypercurv/hypergraph.hpp"
#include "hypercurv/measure.hpp"
#include "hypercurv/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace hypercurv {

/// Joint distribution on vertex pairs with prescribed marginals.
struct Coupling {
  std::map<std::pair<VertexId, VertexId>, Rational> entries;
  ProbMeasure source;
  ProbMeasure target;

  // sum d(x, y) * pi(x, y)
  Rational cost(const Hypergraph& h) const;
  // Row sums equal `source`, column sums equal `target`, entries >= 0.
  bool has_marginals() const;
};

struct UnitFlow {
  VertexId from;
  VertexId to;
  std::int64_t units;
};

/// Optimal transport between integer mass vectors of equal total on the
/// hypergraph metric. Only the excess (from - to)_+ is moved; mass common to
/// both vectors stays put.
struct UnitTransport {
  std::int64_t cost = 0;        // sum of d(from, to) * units
  std::vector<UnitFlow> flows;  // off-diagonal only, sorted by (from, to)
  // Kantorovich potential: 1-Lipschitz for the graph distance and
  // sum_v potential[v] * (from[v] - to[v]) == cost. Empty unless requested.
  std::vector<std::int64_t> potential;
};

UnitTransport transport_units(const Hypergraph& h, std::span<const std::int64_t> from,
                              std::span<const std::int64_t> to, bool with_potential = false);

struct W1Result {
  Rational value;
  Coupling coupling;
};

// Exact L1-Wasserstein distance and an optimal coupling.
W1Result w1(const Hypergraph& h, const ProbMeasure& mu, const ProbMeasure& nu);

// Half the L1 norm of a difference supported inside one hyperedge; all
// distinct vertices of a hyperedge are at distance one. Throws
// SupportOutsideEdge.
Rational within_edge_w1(const Hypergraph& h, const SignedDelta& delta, EdgeId edge);

}  // namespace hypercurv
