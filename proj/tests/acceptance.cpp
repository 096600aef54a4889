// Acceptance suite: one PASS/FAIL line per criterion, failing cells listed
// underneath. Exit status is 1 when any criterion fails.

#include "fixtures.hpp"
#include "hypercurv/bounds.hpp"
#include "hypercurv/curvature.hpp"
#include "hypercurv/random_instances.hpp"
#include "hypercurv/w1.hpp"
#include "hypercurv/wh.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hypercurv;

namespace {

constexpr double kCatalogTol = 1e-9;
constexpr double kLimitRelTol = 1e-3;
constexpr double kRouteTol = 1e-9;
constexpr double kSymmetryTol = 1e-12;
constexpr double kTriangleTol = 1e-9;
constexpr double kLinearTol = 1e-12;
constexpr double kRefineTol = 1e-9;
constexpr double kSlack = 1e-12;  // float slack for one-sided inequalities
constexpr int kRandomInstances = 200;
constexpr std::int64_t kMaxGrid = 12;
constexpr std::size_t kMaxListed = 12;

class Criterion {
 public:
  Criterion(int id, std::string name) : id_(id), name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failed_.size() < kMaxListed) failed_.push_back(what);
  }
  void note(std::string n) { notes_.push_back(std::move(n)); }

  bool report(std::ostream& out, double seconds) const {
    const bool pass = failures_ == 0 && checks_ > 0;
    out << (pass ? "PASS" : "FAIL") << " criterion " << id_ << ": " << name_ << " (" << checks_ - failures_ << "/"
        << checks_ << " checks, " << std::fixed << std::setprecision(1) << seconds << "s)\n";
    out.unsetf(std::ios::fixed);
    for (const auto& f : failed_) out << "    fail: " << f << "\n";
    if (failures_ > failed_.size()) out << "    ... " << failures_ - failed_.size() << " more\n";
    for (const auto& n : notes_) out << "    note: " << n << "\n";
    return pass;
  }

 private:
  int id_;
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

struct CatalogCase {
  CatalogFamily family;
  int n;
};

std::vector<CatalogCase> catalog_cases() {
  std::vector<CatalogCase> out;
  for (int n = 2; n <= 6; ++n) out.push_back({CatalogFamily::complete, n});
  for (int n = 2; n <= 8; ++n) out.push_back({CatalogFamily::cycle, n});
  for (CatalogFamily f : {CatalogFamily::line_ends, CatalogFamily::line_end_next, CatalogFamily::line_both_next}) {
    for (int d = 1; d <= 5; ++d) out.push_back({f, d});
  }
  return out;
}

const std::vector<Rational>& alphas() {
  static const std::vector<Rational> a{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  return a;
}

struct NamedCost {
  std::string name;
  ConcaveCost h;
};

std::vector<NamedCost> costs() {
  return {{"linear(1)", ConcaveCost::linear(Rational(1))},
          {"log(1)", ConcaveCost::log(Rational(1))},
          {"truncation(1/2)", ConcaveCost::truncation(Rational(1, 2))}};
}

std::string label(const CatalogCase& c) { return std::string(to_string(c.family)) + " n=" + std::to_string(c.n); }

// 1. Solver against the closed forms.
void catalog_equivalence(Criterion& cr) {
  for (const CatalogCase& c : catalog_cases()) {
    const CatalogInstance inst = catalog_instance(c.family, c.n);
    for (const NamedCost& nc : costs()) {
      for (const Rational& a : alphas()) {
        const CatalogValues v = catalog(c.family, c.n, nc.h, a);
        const std::string at = label(c) + " alpha=" + to_string(a) + " h=" + nc.name;
        const Rational k = orc_alpha(inst.graph, inst.x, inst.y, a);
        cr.check(k == *v.kappa_alpha, at + ": kappa solver=" + to_string(k) + " formula=" + to_string(*v.kappa_alpha));
        const KappaH kh = orc_alpha_h(inst.graph, nc.h, inst.x, inst.y, a);
        cr.check(kh.optimality == Optimality::exact && std::abs(kh.value - *v.kappa_h_alpha) <= kCatalogTol,
                 at + ": kappa_h solver=" + num(kh.value) + " (" + std::string(to_string(kh.optimality)) +
                     ") formula=" + num(*v.kappa_h_alpha));
      }
    }
  }
}

// 2. Exact LLY values.
void lly_exactness(Criterion& cr) {
  auto expect = [&](CatalogFamily f, int n, const Rational& want) {
    const CatalogInstance inst = catalog_instance(f, n);
    const LlyResult r = lly(inst.graph, inst.x, inst.y);
    cr.check(r.value == want, std::string(to_string(f)) + " n=" + std::to_string(n) + ": lly=" +
                                  to_string(r.value) + " expected " + to_string(want));
  };
  for (int n = 2; n <= 6; ++n) expect(CatalogFamily::complete, n, Rational(n, n - 1));
  for (int n = 3; n <= 8; ++n) expect(CatalogFamily::cycle, n, n <= 5 ? Rational(6 - n, 2) : Rational(0));
  for (int d = 2; d <= 5; ++d) {
    expect(CatalogFamily::line_ends, d, Rational(2, d));
    expect(CatalogFamily::line_end_next, d, Rational(1, d));
    expect(CatalogFamily::line_both_next, d, Rational(0));
  }
}

// 3. h-LLY ratio at alpha = 1 - 2^-10 against the closed-form limit.
void hlly_limits(Criterion& cr) {
  const std::vector<NamedCost> hs{{"log(1)", ConcaveCost::log(Rational(1))},
                                  {"truncation(1/2)", ConcaveCost::truncation(Rational(1, 2))}};
  for (const CatalogCase& c : catalog_cases()) {
    const CatalogInstance inst = catalog_instance(c.family, c.n);
    for (const NamedCost& nc : hs) {
      const CatalogValues v = catalog(c.family, c.n, nc.h);
      if (!v.kappa_h) continue;
      const HllyResult r = hlly(inst.graph, nc.h, inst.x, inst.y);
      const double ref = *v.kappa_h;
      const double rel = std::abs(r.last_ratio - ref) / std::max(1.0, std::abs(ref));
      const bool exact = std::all_of(r.status.begin(), r.status.end(),
                                     [](Optimality o) { return o == Optimality::exact; });
      cr.check(exact && rel < kLimitRelTol && r.alphas.back() == Rational(1023, 1024),
               label(c) + " h=" + nc.name + ": r_10=" + num(r.last_ratio) + " limit=" + num(ref));
    }
  }
}

// 4. Ladder of length 3, truncation 1/2, alpha = 9/10.
void ladder_routes(Criterion& cr) {
  const Hypergraph g = fixture::ladder(3);
  const ConcaveCost h = ConcaveCost::truncation(Rational(1, 2));
  const Rational a(9, 10);
  const WhResult r = wh_exact(g, h, lazy_random_walk(g, g.id("a0"), a), lazy_random_walk(g, g.id("a3"), a));
  cr.check(r.optimality == Optimality::exact, "exact search did not finish");
  cr.check(std::abs(r.value - 1.6) <= kRouteTol, "W_h=" + num(r.value) + " expected 1.6");
  cr.check(std::abs(plan_cost(g, h, r.plan) - r.value) <= kRouteTol, "returned plan cost differs from W_h");
  const double route_a = plan_cost(g, h, fixture::ladder_route_a(g, a));
  const double route_b = plan_cost(g, h, fixture::ladder_route_b(g, a));
  cr.check(std::abs(route_a - 1.65) <= kRouteTol, "route A cost " + num(route_a) + " expected 1.65");
  cr.check(std::abs(route_b - 1.6) <= kRouteTol, "route B cost " + num(route_b) + " expected 1.6");
  cr.check(std::abs(route_b - r.value) <= kRouteTol, "W_h is not attained by route B");
  // Route B is cheaper exactly when 2 h(a) + d h(b/2) + (d-2) h(1-b/2) exceeds
  // 2 h(b/2) + 2 h(1-b/2) + (d-2) h(1).
  const double b = 0.1;
  const int d = 3;
  const double lhs = d * h(b / 2) + 2 * h(0.9) + (d - 2) * h(1 - b / 2);
  const double rhs = 2 * h(b / 2) + 2 * h(1 - b / 2) + (d - 2) * h(1.0);
  cr.check(rhs < lhs, "route inequality fails: " + num(rhs) + " >= " + num(lhs));
  cr.check(std::abs(lhs - route_a) <= kRouteTol && std::abs(rhs - route_b) <= kRouteTol,
           "route formulas disagree with the plans");
}

// 5. Grid hypergraph, log(1), alpha = 9/10.
void grid_plans(Criterion& cr) {
  const Hypergraph g = fixture::grid9();
  const ConcaveCost h = ConcaveCost::log(Rational(1));
  const Rational a(9, 10);
  const ProbMeasure mx = lazy_random_walk(g, g.id("x"), a);
  const ProbMeasure my = lazy_random_walk(g, g.id("y"), a);
  const double balanced = plan_cost(g, h, fixture::grid_balanced_plan(g, a));
  const double combined = plan_cost(g, h, fixture::grid_combined_plan(g, a));
  const WhResult heur = wh_heuristic(g, h, mx, my);
  const double heur_cost = plan_cost(g, h, heur.plan);
  cr.check(heur_cost <= balanced, "heuristic " + num(heur_cost) + " > balanced block plan " + num(balanced));
  cr.check(std::abs(heur_cost - heur.value) <= kRouteTol, "heuristic value differs from its plan cost");
  cr.note("heuristic " + num(heur_cost) + ", combined blocks " + num(combined) + ", balanced blocks " +
          num(balanced));
  WhOptions budget;
  budget.max_states = 2'000;
  budget.max_generated = 2'000'000;
  const WhResult ex = wh_exact(g, h, mx, my, budget);
  if (ex.optimality == Optimality::exact) {
    cr.check(ex.value <= balanced + kSlack && ex.value <= combined + kSlack, "exact value above a plan cost");
    cr.note("exact search finished: " + num(ex.value));
  } else {
    cr.note("optional exact search stopped at its budget (" + std::to_string(ex.states_expanded) +
            " states); lower bound " + num(ex.lower_bound));
  }
}

// 6. Sandwich, symmetry, triangle inequality and the linear case.
void metric_properties(Criterion& cr) {
  std::mt19937_64 rng(20240601);
  const ConcaveCost lg = ConcaveCost::log(Rational(1));
  const ConcaveCost tr = ConcaveCost::truncation(Rational(1, 2));
  const ConcaveCost lin = ConcaveCost::linear(Rational(2));
  for (int i = 0; i < kRandomInstances; ++i) {
    const Hypergraph g = random_hypergraph(rng);
    const std::int64_t D = 1 + static_cast<std::int64_t>(rng() % kMaxGrid);
    const ProbMeasure mu = random_measure(rng, g, D);
    const ProbMeasure nu = random_measure(rng, g, D);
    const ProbMeasure rho = random_measure(rng, g, D);
    const std::string at = "instance " + std::to_string(i);
    const double w = to_double(w1(g, mu, nu).value);
    for (const ConcaveCost* h : {&lg, &tr}) {
      const WhResult ab = wh_exact(g, *h, mu, nu);
      const WhResult ba = wh_exact(g, *h, nu, mu);
      const WhResult ac = wh_exact(g, *h, mu, rho);
      const WhResult cb = wh_exact(g, *h, rho, nu);
      const bool exact = ab.optimality == Optimality::exact && ba.optimality == Optimality::exact &&
                         ac.optimality == Optimality::exact && cb.optimality == Optimality::exact;
      const std::string hn = " " + h->describe();
      cr.check(exact, at + hn + ": search budget exhausted");
      cr.check(h->h1() * w <= ab.value + kSlack && ab.value <= h->hp0() * w + kSlack,
               at + hn + ": sandwich " + num(h->h1() * w) + " <= " + num(ab.value) + " <= " + num(h->hp0() * w));
      cr.check(std::abs(ab.value - ba.value) <= kSymmetryTol,
               at + hn + ": asymmetric " + num(ab.value) + " vs " + num(ba.value));
      cr.check(ab.value <= ac.value + cb.value + kTriangleTol, at + hn + ": triangle inequality");
    }
    const WhResult l = wh_exact(g, lin, mu, nu);
    cr.check(std::abs(l.value - 2 * w) <= kLinearTol, at + ": linear W_h=" + num(l.value) + " vs 2 W_1=" + num(2 * w));
  }
}

// 7. kappa_h <= kappa, the two-sided kappa_h bound, the kappa bound and
// midpoint concavity.
void curvature_inequalities(Criterion& cr) {
  const std::vector<NamedCost> hs{{"log(1)", ConcaveCost::log(Rational(1))},
                                  {"truncation(1/2)", ConcaveCost::truncation(Rational(1, 2))},
                                  {"power(1/2)", ConcaveCost::power(Rational(1, 2))}};
  const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  int skipped = 0;
  // max_grid == 0 means no limit on the grid denominator.
  auto run_pair = [&](const Hypergraph& g, VertexId x, VertexId y, const std::string& at, std::int64_t max_grid) {
    const int d = g.distance(x, y);
    std::vector<Rational> k;
    for (const Rational& a : grid) {
      k.push_back(orc_alpha(g, x, y, a));
      const Rational bound = 2 * (1 - a) / d;
      cr.check(boost::multiprecision::abs(k.back()) <= bound, at + " alpha=" + to_string(a) + ": |kappa| above 2(1-alpha)/d");
      const std::vector<ProbMeasure> walks{lazy_random_walk(g, x, a), lazy_random_walk(g, y, a)};
      if (max_grid > 0 && common_denominator(walks) > max_grid) {
        ++skipped;
        continue;
      }
      for (const NamedCost& nc : hs) {
        const KappaH kh = orc_alpha_h(g, nc.h, x, y, a);
        const double b = to_double(1 - a);
        const std::string where = at + " alpha=" + to_string(a) + " h=" + nc.name;
        cr.check(kh.optimality == Optimality::exact, where + ": search budget exhausted");
        cr.check(kh.value <= to_double(k.back()) + kSlack, where + ": kappa_h " + num(kh.value) + " > kappa");
        cr.check(kh.value <= 2 * b / d + kSlack, where + ": kappa_h above 2(1-alpha)/d");
        if (nc.h.hp0_finite()) {
          cr.check(kh.value >= -2 * nc.h.hp0() * b / (nc.h.h1() * d) - kSlack, where + ": kappa_h below lower bound");
        }
      }
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i + 2; j < grid.size(); j += 2) {
        const Rational mid = (grid[i] + grid[j]) / 2;
        cr.check(2 * orc_alpha(g, x, y, mid) >= k[i] + k[j],
                 at + ": concavity fails between " + to_string(grid[i]) + " and " + to_string(grid[j]));
      }
    }
  };
  for (const CatalogCase& c : catalog_cases()) {
    const CatalogInstance inst = catalog_instance(c.family, c.n);
    run_pair(inst.graph, inst.x, inst.y, label(c), 0);
  }
  std::mt19937_64 rng(777);
  for (int i = 0; i < 60; ++i) {
    const Hypergraph g = random_hypergraph(rng);
    const VertexId y = static_cast<VertexId>(1 + rng() % (g.num_vertices() - 1));
    run_pair(g, 0, y, "random " + std::to_string(i), kMaxGrid);
  }
  cr.note(std::to_string(skipped) + " random (pair, alpha) points above the 1/" + std::to_string(kMaxGrid) +
          " grid checked for kappa only");
}

// 8. Bonnet-Myers and vertex-count bounds, the line lower bound and the
// collapse map.
void bounds(Criterion& cr) {
  const ConcaveCost lin = ConcaveCost::linear(Rational(1));
  for (int n = 2; n <= 6; ++n) {
    const CatalogInstance inst = catalog_instance(CatalogFamily::complete, n);
    const HllyResult r = hlly(inst.graph, lin, inst.x, inst.y);
    const DiameterBound bm = bonnet_myers_bound(lin, r.estimate, BoundKind::hypergraph_hlly);
    const std::string at = "K_" + std::to_string(n);
    cr.check(bm.bound == 1 && bm.bound == inst.graph.diameter(), at + ": diameter bound " + std::to_string(bm.bound));
    const auto vc = vertex_count_bound(lin, r.estimate, inst.graph.max_degree());
    cr.check(vc == n, at + ": vertex count bound " + std::to_string(vc));
  }

  std::mt19937_64 rng(4242);
  const std::vector<ConcaveCost> hs{ConcaveCost::log(Rational(1)), ConcaveCost::truncation(Rational(1, 2))};
  int pairs = 0;
  for (int i = 0; i < 60; ++i) {
    const Hypergraph g = random_hypergraph(rng, RandomShape{4, 7, 4, 3});
    for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
      for (VertexId y = x + 1; y < static_cast<VertexId>(g.num_vertices()); ++y) {
        const int d = g.distance(x, y);
        if (d < 2) continue;
        ++pairs;
        const Rational a = alphas()[static_cast<std::size_t>(rng() % alphas().size())];
        for (const ConcaveCost& h : hs) {
          const WhResult r = wh_exact(g, h, lazy_random_walk(g, x, a), lazy_random_walk(g, y, a));
          const double lb = wh_line_lower_bound(h, a, d);
          cr.check(r.optimality == Optimality::exact && r.value >= lb - kSlack,
                   "random " + std::to_string(i) + " pair " + g.label(x) + "," + g.label(y) + ": W_h " +
                       num(r.value) + " below " + num(lb));
        }
        const CollapseMap f = collapse_map(g, x, y);
        cr.check(is_one_lipschitz(g, f.value), "random " + std::to_string(i) + ": collapse map not 1-Lipschitz");
      }
    }
  }
  cr.note(std::to_string(pairs) + " random pairs at distance >= 2");
  for (const CatalogCase& c : catalog_cases()) {
    const CatalogInstance inst = catalog_instance(c.family, c.n);
    const auto n = static_cast<VertexId>(inst.graph.num_vertices());
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x == y || inst.graph.distance(x, y) < 2) continue;
        cr.check(is_one_lipschitz(inst.graph, collapse_map(inst.graph, x, y).value),
                 label(c) + ": collapse map not 1-Lipschitz");
      }
    }
  }
}

// 9. Doubling the grid does not change W_h.
void refine_stability(Criterion& cr) {
  WhOptions fine;
  fine.refine = 2;
  for (const CatalogCase& c : catalog_cases()) {
    const CatalogInstance inst = catalog_instance(c.family, c.n);
    for (const NamedCost& nc : costs()) {
      for (const Rational& a : alphas()) {
        const ProbMeasure mx = lazy_random_walk(inst.graph, inst.x, a);
        const ProbMeasure my = lazy_random_walk(inst.graph, inst.y, a);
        const WhResult r1 = wh_exact(inst.graph, nc.h, mx, my);
        const WhResult r2 = wh_exact(inst.graph, nc.h, mx, my, fine);
        cr.check(r1.optimality == Optimality::exact && r2.optimality == Optimality::exact &&
                     std::abs(r1.value - r2.value) <= kRefineTol,
                 label(c) + " alpha=" + to_string(a) + " h=" + nc.name + ": " + num(r1.value) + " vs " +
                     num(r2.value));
      }
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    void (*fn)(Criterion&);
  };
  const Entry entries[] = {
      {1, "catalog equivalence", catalog_equivalence},
      {2, "LLY exactness", lly_exactness},
      {3, "h-LLY limits", hlly_limits},
      {4, "ladder route selection", ladder_routes},
      {5, "grid hypergraph plans", grid_plans},
      {6, "sandwich and metric properties", metric_properties},
      {7, "curvature inequalities", curvature_inequalities},
      {8, "diameter and vertex bounds", bounds},
      {9, "refine stability", refine_stability},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Criterion cr(e.id, e.name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(cr);
    } catch (const std::exception& ex) {
      cr.check(false, std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!cr.report(std::cout, s)) ++failed;
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
