#pragma once

#include "hypercurv/concave_cost.hpp"
#include "hypercurv/hypergraph.hpp"
#include "hypercurv/rational.hpp"
#include "hypercurv/wh.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypercurv {

// 1 - W_1(m_x^alpha, m_y^alpha) / d(x, y). Throws SameVertex.
Rational orc_alpha(const Hypergraph& g, VertexId x, VertexId y, const Rational& alpha);

struct CurvatureOptions {
  WhOptions wh;
  // Skip the exact search and use the heuristic plan.
  bool heuristic_only = false;
};

struct KappaH {
  double value = 0;     // 1 - W_h / (h(1) d(x, y))
  double wh = 0;
  Optimality optimality = Optimality::exact;
  std::int64_t states_expanded = 0;
  std::int64_t denominator = 1;
};

// 1 - W_h(m_x^alpha, m_y^alpha) / (h(1) d(x, y)); falls back to the
// heuristic value (flagged) when the search budget runs out.
KappaH orc_alpha_h(const Hypergraph& g, const ConcaveCost& h, VertexId x, VertexId y,
                   const Rational& alpha, const CurvatureOptions& options = {});

struct LlyResult {
  Rational value;
  Rational alpha;        // the later of the two agreeing evaluation points
  bool graph = true;     // every hyperedge has two vertices
};

// lim kappa(alpha) / (1 - alpha) as alpha -> 1, read off the first two
// consecutive dyadic points 1 - 2^-k (k = 4, 5, ..., 20) that agree
// exactly. On graphs alpha -> kappa(alpha) is piecewise linear with at most
// three pieces, so this is exact; on hypergraphs it is a stabilized dyadic
// value. Throws NoStabilization.
LlyResult lly(const Hypergraph& g, VertexId x, VertexId y);

struct HllyResult {
  std::vector<Rational> alphas;
  std::vector<double> ratios;        // kappa_h(alpha_k) / (1 - alpha_k)
  std::vector<Optimality> status;
  double estimate = 0;               // Aitken extrapolation of the ratios
  double last_ratio = 0;
  bool converged = false;            // relative change of last two ratios < 1e-3
};

// Default grid alpha_k = 1 - 2^-k, k = 3..10.
std::vector<Rational> default_hlly_grid();

HllyResult hlly(const Hypergraph& g, const ConcaveCost& h, VertexId x, VertexId y,
                const std::vector<Rational>& grid = default_hlly_grid(),
                const CurvatureOptions& options = {});

struct CurvaturePoint {
  Rational alpha;
  Rational w1;
  Rational kappa;
  KappaH kappa_h;
};

struct CurvatureReport {
  VertexId x = 0;
  VertexId y = 0;
  int distance = 0;
  std::vector<CurvaturePoint> points;
  std::optional<LlyResult> lly;
  std::optional<HllyResult> hlly;
};

CurvatureReport curvature_report(const Hypergraph& g, const ConcaveCost& h, VertexId x, VertexId y,
                                 const std::vector<Rational>& alphas,
                                 const CurvatureOptions& options = {});

// ---------------------------------------------------------------------------
// Closed forms for complete graphs, cycles and the three line-graph layouts.

enum class CatalogFamily { complete, cycle, line_ends, line_end_next, line_both_next };

std::optional<CatalogFamily> catalog_family_from_string(std::string_view name);
std::string_view to_string(CatalogFamily f);

struct CatalogInstance {
  Hypergraph graph;
  VertexId x;
  VertexId y;
};

// complete(n): K_n, x = 0, y = 1.
// cycle(n): C_n, adjacent pair 0, 1.
// line_ends(d): path 0..d, x = 0, y = d.
// line_end_next(d): path 0..d+1, x = 0, y = d.
// line_both_next(d): path 0..d+2, x = 1, y = d+1.
CatalogInstance catalog_instance(CatalogFamily f, int n);

struct CatalogValues {
  int distance = 0;
  std::optional<Rational> kappa_alpha;  // when alpha is given
  Rational kappa;                       // LLY
  std::optional<double> wh;             // W_h(m_x, m_y), when alpha is given
  std::optional<double> kappa_h_alpha;  // when alpha is given
  std::optional<double> kappa_h;        // h-LLY; absent when h'(0) is infinite and needed
};

// Throws OutOfCatalogRange.
CatalogValues catalog(CatalogFamily f, int n, const ConcaveCost& h,
                      const std::optional<Rational>& alpha = std::nullopt);

}  // namespace hypercurv
