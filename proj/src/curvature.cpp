#include "hypercurv/curvature.hpp"

#include "hypercurv/error.hpp"
#include "hypercurv/measure.hpp"
#include "hypercurv/w1.hpp"

#include <cmath>

namespace hypercurv {

namespace {

void require_distinct(const Hypergraph& g, VertexId x, VertexId y) {
  for (VertexId v : {x, y}) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) {
      throw Error(ErrorCode::UnknownVertex, "unknown vertex id " + std::to_string(v));
    }
  }
  if (x == y) throw Error(ErrorCode::SameVertex, "curvature needs two distinct vertices");
}

Rational dyadic(int k) { return 1 - Rational(1, BigInt(1) << k); }

}  // namespace

Rational orc_alpha(const Hypergraph& g, VertexId x, VertexId y, const Rational& alpha) {
  require_distinct(g, x, y);
  g.require_valid();
  const auto w = w1(g, lazy_random_walk(g, x, alpha), lazy_random_walk(g, y, alpha));
  return 1 - w.value / g.distance(x, y);
}

KappaH orc_alpha_h(const Hypergraph& g, const ConcaveCost& h, VertexId x, VertexId y,
                   const Rational& alpha, const CurvatureOptions& options) {
  require_distinct(g, x, y);
  const auto mx = lazy_random_walk(g, x, alpha);
  const auto my = lazy_random_walk(g, y, alpha);
  const WhResult r = options.heuristic_only ? wh_heuristic(g, h, mx, my)
                                            : wh_exact(g, h, mx, my, options.wh);
  KappaH out;
  out.wh = r.value;
  out.value = 1 - r.value / (h.h1() * g.distance(x, y));
  out.optimality = r.optimality;
  out.states_expanded = r.states_expanded;
  out.denominator = r.denominator;
  return out;
}

LlyResult lly(const Hypergraph& g, VertexId x, VertexId y) {
  require_distinct(g, x, y);
  LlyResult out;
  out.graph = true;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.edge(static_cast<EdgeId>(e)).size() != 2) out.graph = false;
  }
  auto ratio = [&](int k) { return orc_alpha(g, x, y, dyadic(k)) * (BigInt(1) << k); };
  Rational prev = ratio(4);
  for (int k = 5; k <= 20; ++k) {
    Rational cur = ratio(k);
    if (cur == prev) {
      out.value = cur;
      out.alpha = dyadic(k);
      return out;
    }
    prev = cur;
  }
  throw Error(ErrorCode::NoStabilization,
              "kappa(alpha)/(1-alpha) still moving at alpha = 1 - 2^-20: " + to_string(prev));
}

std::vector<Rational> default_hlly_grid() {
  std::vector<Rational> out;
  for (int k = 3; k <= 10; ++k) out.push_back(dyadic(k));
  return out;
}

HllyResult hlly(const Hypergraph& g, const ConcaveCost& h, VertexId x, VertexId y,
                const std::vector<Rational>& grid, const CurvatureOptions& options) {
  require_distinct(g, x, y);
  if (grid.empty()) throw Error(ErrorCode::BadParams, "empty alpha grid");
  HllyResult out;
  for (const Rational& a : grid) {
    if (a >= 1) throw Error(ErrorCode::AlphaOutOfRange, "hlly grid points must be below 1");
    const KappaH k = orc_alpha_h(g, h, x, y, a, options);
    out.alphas.push_back(a);
    out.ratios.push_back(k.value / to_double(1 - a));
    out.status.push_back(k.optimality);
  }
  const auto& r = out.ratios;
  const std::size_t n = r.size();
  out.last_ratio = r.back();
  out.estimate = r.back();
  if (n >= 3) {
    const double d1 = r[n - 1] - r[n - 2];
    const double d2 = r[n - 1] - 2 * r[n - 2] + r[n - 3];
    if (std::abs(d2) > 1e-14) out.estimate = r[n - 1] - d1 * d1 / d2;
  }
  if (n >= 2) {
    out.converged = std::abs(r[n - 1] - r[n - 2]) < 1e-3 * std::max(1.0, std::abs(r[n - 1]));
  }
  return out;
}

CurvatureReport curvature_report(const Hypergraph& g, const ConcaveCost& h, VertexId x, VertexId y,
                                 const std::vector<Rational>& alphas,
                                 const CurvatureOptions& options) {
  require_distinct(g, x, y);
  CurvatureReport out;
  out.x = x;
  out.y = y;
  out.distance = g.distance(x, y);
  for (const Rational& a : alphas) {
    CurvaturePoint p;
    p.alpha = a;
    p.w1 = w1(g, lazy_random_walk(g, x, a), lazy_random_walk(g, y, a)).value;
    p.kappa = 1 - p.w1 / out.distance;
    p.kappa_h = orc_alpha_h(g, h, x, y, a, options);
    out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace hypercurv
