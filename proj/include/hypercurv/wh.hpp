#pragma once

#include "hypercurv/concave_cost.hpp"
#include "hypercurv/hypergraph.hpp"
#include "hypercurv/measure.hpp"
#include "hypercurv/transport_plan.hpp"
#include "hypercurv/w1.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace hypercurv {

enum class Optimality { exact, heuristic_upper_bound };

std::string_view to_string(Optimality o);

struct WhOptions {
  // Grid denominator is refine * lcm(denominators of mu, nu).
  int refine = 1;
  // Replaces the computed grid denominator when set.
  std::optional<std::int64_t> denominator;
  std::int64_t max_states = 2'000'000;
  std::int64_t max_generated = 5'000'000;
  // Skip successors that move away from the target without consolidating
  // mass. Off gives the exhaustive search.
  bool pruned = true;
  std::optional<int> max_steps;
};

struct WhResult {
  double value = 0;
  TransportPlan plan;
  Optimality optimality = Optimality::heuristic_upper_bound;
  double lower_bound = 0;
  std::int64_t states_expanded = 0;
  std::int64_t denominator = 1;
};

/// Best-first search over measures on the 1/D grid. A node is a measure, an
/// arc is one redistribution inside one hyperedge with weight h(moved / D),
/// and the remaining cost is estimated by h(1) * W_1(current, nu), which
/// never overestimates because h(c) >= c h(1).
///
/// When the budget runs out the best plan known so far is returned with
/// optimality heuristic_upper_bound. Throws InfeasibleQuantization when
/// mu or nu is not on the requested grid.
WhResult wh_exact(const Hypergraph& g, const ConcaveCost& h, const ProbMeasure& mu,
                  const ProbMeasure& nu, const WhOptions& options = {});

// Plan built from a W_1-optimal coupling: parcels follow shortest paths,
// parcels waiting on the same hyperedge are batched, then steps on the same
// hyperedge are merged while that lowers the cost.
WhResult wh_heuristic(const Hypergraph& g, const ConcaveCost& h, const ProbMeasure& mu,
                      const ProbMeasure& nu);

struct WhBounds {
  double lower = 0;  // h(1) * W_1
  double upper = 0;
};

// lower = h(1) W_1(mu, nu). upper = the cheaper of hopping each parcel of a
// W_1-optimal coupling alone (at most h'(0) W_1) and the heuristic plan.
WhBounds wh_bounds(const Hypergraph& g, const ConcaveCost& h, const ProbMeasure& mu,
                   const ProbMeasure& nu);

/// Rewrites `plan` so that every pair (x, y) charged by `coupling` travels
/// along one transport path, without increasing the cost. Two competing
/// paths of the same pair are merged by shifting all mass onto one of them,
/// whichever endpoint of the affine family is cheaper.
///
/// Throws NotAssociated when gluing the per-step couplings of `plan` does
/// not reproduce `coupling`. Steps must use minimal-displacement moves (no
/// vertex both sends and receives within a step).
TransportPlan normalize_plan(const Hypergraph& g, const ConcaveCost& h, const TransportPlan& plan,
                             const Coupling& coupling);

// Coupling obtained by gluing the per-step couplings of a plan.
Coupling glue(const Hypergraph& g, const TransportPlan& plan);

// Number of distinct transport paths per coupled pair.
std::map<std::pair<VertexId, VertexId>, std::size_t> transport_path_counts(const Hypergraph& g,
                                                                            const TransportPlan& plan);

}  // namespace hypercurv
