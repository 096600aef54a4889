#pragma once

#include "hypercurv/concave_cost.hpp"
#include "hypercurv/hypergraph.hpp"
#include "hypercurv/rational.hpp"
#include "hypercurv/transport_plan.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hypercurv {

/// 1-Lipschitz projection of a hypergraph onto the line 0..d(x, y):
/// F(v) = d(x, v) when v is closer to x than d/2, d - d(v, y) when closer
/// to y than d/2, floor(d / 2) otherwise.
struct CollapseMap {
  int length = 0;               // d(x, y)
  std::vector<int> value;       // F, indexed by vertex id
  std::vector<int> part;        // 1, 2 or 3
};

// Throws PairTooClose when d(x, y) < 2.
CollapseMap collapse_map(const Hypergraph& g, VertexId x, VertexId y);

bool is_one_lipschitz(const Hypergraph& g, const std::vector<int>& f);

struct PushedPlan {
  Hypergraph line;  // path on labels 0..length
  TransportPlan plan;
};

// Image of a plan under F x F; every hyperedge lands on one line edge, and
// steps whose moves all collapse are dropped.
PushedPlan push_forward(const Hypergraph& g, const CollapseMap& f, const TransportPlan& plan);

// 2 h(alpha) + (d - 2) h(1). Throws BadParams when d < 2.
double wh_line_lower_bound(const ConcaveCost& h, const Rational& alpha, int d);

enum class BoundKind { graph_lly, hypergraph_hlly };

struct DiameterBound {
  std::int64_t bound = 0;
  bool vacuous = false;  // h'(1) = 0
  std::string warning;
};

// floor(2 / kappa) for graph_lly, floor((h'(1) / h(1)) (2 / kappa)) for
// hypergraph_hlly. Throws NonpositiveKappa.
DiameterBound bonnet_myers_bound(const ConcaveCost& h, double kappa, BoundKind kind);

// 1 + sum_{j=1}^{J} Delta^j prod_{i=1}^{j-1} max(0, 1 - kappa i / 2) with
// J = floor(2 h'(1) / (h(1) kappa)). Throws NonpositiveKappa.
std::int64_t vertex_count_bound(const ConcaveCost& h, double kappa, int max_degree);

struct GammaSets {
  std::vector<VertexId> plus;   // neighbours of y one step further from x
  std::vector<VertexId> minus;  // neighbours of y one step closer to x
};

// Throws SameVertex.
GammaSets gamma_sets(const Hypergraph& g, VertexId x, VertexId y);

// (1 / d) (1 + (|Gamma-| - |Gamma+|) / d_y)
double gamma_curvature_bound(const Hypergraph& g, VertexId x, VertexId y);

}  // namespace hypercurv
