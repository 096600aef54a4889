#include "hypercurv/cli.hpp"

#include "hypercurv/bounds.hpp"
#include "hypercurv/curvature.hpp"
#include "hypercurv/error.hpp"
#include "hypercurv/json_io.hpp"
#include "hypercurv/random_instances.hpp"
#include "hypercurv/w1.hpp"
#include "hypercurv/wh.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hypercurv {

namespace {

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_cell(t.columns[i]);
    out << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i]);
      out << "\n";
    }
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : t.rows) {
      Json row = Json::object();
      for (std::size_t i = 0; i < r.size(); ++i) row[t.columns[i]] = r[i];
      arr.push_back(row);
    }
    out << arr.dump(2) << "\n";
  } else {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& r : t.rows)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "  " : "") << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
      }
      out << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path to a `.hg` file, or gen:<family>[:<n>] for a built-in family.
Hypergraph load_graph(const std::string& spec, bool allow_nonsimple) {
  if (spec.rfind("gen:", 0) == 0) {
    const std::string rest = spec.substr(4);
    const auto colon = rest.find(':');
    const std::string name = rest.substr(0, colon);
    const auto family = family_from_string(name);
    if (!family) throw Error(ErrorCode::BadParams, "unknown family '" + name + "'");
    int n = 0;
    if (colon != std::string::npos) n = std::stoi(rest.substr(colon + 1));
    return generate(*family, n);
  }
  return load_hypergraph(spec, ParseOptions{allow_nonsimple});
}

// Inline JSON or @path.
Json json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') return parse_json(read_file(text.substr(1)));
  return parse_json(text);
}

std::pair<VertexId, VertexId> parse_pair(const Hypergraph& g, const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::BadParams, "--pair expects x,y");
  return {g.id(s.substr(0, comma)), g.id(s.substr(comma + 1))};
}

std::vector<Rational> parse_alphas(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational a = parse_rational(item);
    if (a < 0 || a > 1) throw Error(ErrorCode::AlphaOutOfRange, "alpha " + item + " is outside [0,1]");
    out.push_back(a);
  }
  if (out.empty()) throw Error(ErrorCode::BadParams, "empty alpha list");
  return out;
}

std::vector<std::pair<VertexId, VertexId>> select_pairs(const Hypergraph& g, const std::string& pair,
                                                        const std::string& pairs) {
  if (!pair.empty()) return {parse_pair(g, pair)};
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      if (pairs == "all" || g.adjacent(x, y)) out.emplace_back(x, y);
    }
  }
  // Sorted by label so the output order does not depend on file order.
  std::sort(out.begin(), out.end(), [&](auto a, auto b) {
    return std::make_pair(g.label(a.first), g.label(a.second)) <
           std::make_pair(g.label(b.first), g.label(b.second));
  });
  return out;
}

struct SolverFlags {
  int refine = 1;
  std::int64_t max_states = WhOptions{}.max_states;
  bool exact = false;
  bool heuristic = false;
  bool unpruned = false;
  int max_steps = 0;

  CurvatureOptions options() const {
    CurvatureOptions o;
    o.wh.refine = refine;
    o.wh.max_states = max_states;
    o.wh.pruned = !unpruned;
    if (max_steps > 0) o.wh.max_steps = max_steps;
    o.heuristic_only = heuristic;
    return o;
  }

  void add_to(CLI::App* app) {
    app->add_option("--refine", refine, "grid refinement factor")->check(CLI::PositiveNumber);
    app->add_option("--max-states", max_states, "state budget of the exact search")->check(CLI::PositiveNumber);
    auto* ex = app->add_flag("--exact", exact, "exact best-first search (default)");
    auto* he = app->add_flag("--heuristic", heuristic, "heuristic plan only");
    ex->excludes(he);
    app->add_flag("--unpruned", unpruned, "disable dominance pruning");
    app->add_option("--max-steps", max_steps, "limit on plan length")->check(CLI::PositiveNumber);
  }
};

Table curvature_table(const Hypergraph& g, const ConcaveCost& h,
                      const std::vector<std::pair<VertexId, VertexId>>& pairs,
                      const std::vector<Rational>& alphas, const CurvatureOptions& opt) {
  Table t{{"x", "y", "alpha", "d", "w1", "wh", "wh_status", "kappa", "kappa_h"}, {}};
  for (auto [x, y] : pairs) {
    const CurvatureReport rep = curvature_report(g, h, x, y, alphas, opt);
    for (const auto& p : rep.points) {
      t.rows.push_back({g.label(x), g.label(y), to_string(p.alpha), std::to_string(rep.distance),
                        to_string(p.w1), fmt(p.kappa_h.wh), std::string(to_string(p.kappa_h.optimality)),
                        to_string(p.kappa), fmt(p.kappa_h.value)});
    }
  }
  return t;
}

struct MeasureFlags {
  std::string pair, alpha, mu, nu;

  void add_to(CLI::App* app) {
    app->add_option("--pair", pair, "x,y: use m_x^alpha and m_y^alpha (Dirac masses without --alpha)");
    app->add_option("--alpha", alpha, "idleness p/q");
    app->add_option("--mu", mu, "source measure JSON or @file");
    app->add_option("--nu", nu, "target measure JSON or @file");
  }

  std::pair<ProbMeasure, ProbMeasure> resolve(const Hypergraph& g) const {
    if (!pair.empty()) {
      auto [x, y] = parse_pair(g, pair);
      const Rational a = alpha.empty() ? Rational(1) : parse_rational(alpha);
      return {lazy_random_walk(g, x, a), lazy_random_walk(g, y, a)};
    }
    if (mu.empty() || nu.empty()) throw Error(ErrorCode::BadParams, "give --pair or both --mu and --nu");
    return {measure_from_json(g, json_arg(mu)), measure_from_json(g, json_arg(nu))};
  }
};

std::string describe_measure(const Hypergraph& g, const ProbMeasure& m) { return to_json(g, m).dump(); }

int props(std::uint64_t seed, int count, std::ostream& out) {
  std::mt19937_64 rng(seed);
  const auto h = ConcaveCost::log(1);
  const auto lin = ConcaveCost::linear(1);
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_hypergraph(rng);
    const std::int64_t denoms[] = {1, 2, 3, 4, 6};
    const std::int64_t d = denoms[std::uniform_int_distribution<int>(0, 4)(rng)];
    const auto mu = random_measure(rng, g, d);
    const auto nu = random_measure(rng, g, d);
    const auto w = w1(g, mu, nu).value;
    const auto fwd = wh_exact(g, h, mu, nu);
    const auto bwd = wh_exact(g, h, nu, mu);
    const auto linear = wh_exact(g, lin, mu, nu);
    const double lo = h.h1() * to_double(w);
    const double hi = h.hp0() * to_double(w);
    bool ok = fwd.value >= lo - 1e-12 && fwd.value <= hi + 1e-12 &&
              std::abs(fwd.value - bwd.value) <= 1e-12 && std::abs(linear.value - to_double(w)) <= 1e-12;
    if (!ok) {
      ++failures;
      out << "FAIL instance " << i << ": " << to_hg(g) << " mu=" << describe_measure(g, mu)
          << " nu=" << describe_measure(g, nu) << " w1=" << to_string(w) << " wh=" << fmt(fwd.value)
          << " wh_rev=" << fmt(bwd.value) << " wh_linear=" << fmt(linear.value) << "\n";
    }
  }
  out << (failures == 0 ? "PASS" : "FAIL") << " " << count - failures << "/" << count
      << " random instances (seed " << seed << ")\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transport distances and Ricci curvatures on hypergraphs", "hypercurv"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));

  std::string graph;
  bool allow_nonsimple = false;
  std::string hspec = R"({"family":"log","a":"1"})";
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph, ".hg file or gen:<family>[:<n>]")->required();
    sub->add_flag("--allow-nonsimple", allow_nonsimple, "accept loops, nested hyperedges, disconnection");
  };
  auto add_h = [&](CLI::App* sub) { sub->add_option("--h", hspec, "h spec JSON"); };

  SolverFlags solver;
  MeasureFlags measures;
  std::string pair, pairs = "adjacent", alphas = "0,1/4,1/2,3/4", plan_text, kappa_text, kind = "hypergraph";
  std::string family_name;
  int n = 0, max_degree = 0, grid_points = 16, count = 20;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check that a hypergraph is connected and simple");
  add_graph(validate);

  auto* dist = app.add_subcommand("dist", "graph distance, degrees and diameter");
  add_graph(dist);
  dist->add_option("--pair", pair, "x,y");

  auto* w1_cmd = app.add_subcommand("w1", "Wasserstein-1 distance and an optimal coupling");
  add_graph(w1_cmd);
  measures.add_to(w1_cmd);

  auto* wh_cmd = app.add_subcommand("wh", "stepwise transport distance W_h and a plan");
  add_graph(wh_cmd);
  add_h(wh_cmd);
  measures.add_to(wh_cmd);
  solver.add_to(wh_cmd);

  auto* cost_cmd = app.add_subcommand("plan-cost", "validate a plan and recompute its cost");
  add_graph(cost_cmd);
  add_h(cost_cmd);
  cost_cmd->add_option("--plan", plan_text, "plan JSON or @file")->required();

  auto* curv = app.add_subcommand("curvature", "kappa(alpha) and kappa_h(alpha) per pair");
  add_graph(curv);
  add_h(curv);
  auto* pair_opt = curv->add_option("--pair", pair, "x,y");
  curv->add_option("--pairs", pairs, "all|adjacent")->check(CLI::IsMember({"all", "adjacent"}))->excludes(pair_opt);
  curv->add_option("--alpha", alphas, "comma separated p/q list");
  solver.add_to(curv);

  auto* limit = app.add_subcommand("limit", "LLY curvature and the h-LLY estimate");
  add_graph(limit);
  limit->add_option("--h", hspec, "h spec JSON; enables the h-LLY estimate");
  limit->add_option("--pair", pair, "x,y")->required();
  solver.add_to(limit);

  auto* bounds = app.add_subcommand("bounds", "diameter and vertex-count bounds from a curvature bound");
  add_h(bounds);
  auto* kappa_opt = bounds->add_option("--kappa", kappa_text, "positive curvature lower bound p/q");
  bounds->add_option("--max-degree", max_degree, "maximum degree");
  bounds->add_option("--kind", kind, "graph|hypergraph")->check(CLI::IsMember({"graph", "hypergraph"}));
  bounds->add_option("--family", family_name, "take kappa from a closed-form family")->excludes(kappa_opt);
  bounds->add_option("--n", n, "family size");

  auto* catalog_cmd = app.add_subcommand("catalog", "closed-form values");
  catalog_cmd->require_subcommand(1);
  auto* verify = catalog_cmd->add_subcommand("verify", "compare solvers against the closed forms");
  verify->add_option("--family", family_name, "complete|cycle|line_ends|line_end_next|line_both_next")->required();
  verify->add_option("--n", n, "n for complete/cycle, d for lines")->required();
  add_h(verify);
  verify->add_option("--alpha", alphas, "comma separated p/q list");
  solver.add_to(verify);

  auto* sweep = app.add_subcommand("sweep", "kappa and kappa_h on a uniform alpha grid");
  add_graph(sweep);
  add_h(sweep);
  sweep->add_option("--pair", pair, "x,y")->required();
  sweep->add_option("--points", grid_points, "alpha = k / points, k = 0..points")->check(CLI::PositiveNumber);
  solver.add_to(sweep);

  auto* props_cmd = app.add_subcommand("props", "randomized sandwich and symmetry checks");
  props_cmd->add_option("--seed", seed, "random seed");
  props_cmd->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (props_cmd->parsed()) return props(seed, count, out);

    if (bounds->parsed()) {
      const auto h = parse_cost(hspec);
      double kappa = 0;
      std::string source = "given";
      if (!family_name.empty()) {
        const auto fam = catalog_family_from_string(family_name);
        if (!fam) throw Error(ErrorCode::BadParams, "unknown family '" + family_name + "'");
        const auto inst = catalog_instance(*fam, n);
        const auto vals = catalog(*fam, n, h);
        if (kind == "graph") {
          kappa = to_double(vals.kappa);
        } else {
          if (!vals.kappa_h) throw Error(ErrorCode::InfiniteDerivativeAtZero, "closed form needs finite h'(0)");
          kappa = *vals.kappa_h;
        }
        if (max_degree == 0) max_degree = inst.graph.max_degree();
        source = "closed form";
      } else {
        if (kappa_text.empty()) throw Error(ErrorCode::BadParams, "give --kappa or --family");
        kappa = to_double(parse_rational(kappa_text));
      }
      if (max_degree < 1) throw Error(ErrorCode::BadParams, "give --max-degree");
      const auto bk = kind == "graph" ? BoundKind::graph_lly : BoundKind::hypergraph_hlly;
      const auto diam = bonnet_myers_bound(h, kappa, bk);
      const auto count_bound = vertex_count_bound(h, kappa, max_degree);
      if (format == "table") {
        out << "diam ≤ " << diam.bound << ", |V| ≤ " << count_bound << "\n";
        if (diam.vacuous) out << "warning: " << diam.warning << "\n";
      } else {
        Table t{{"kappa", "kappa_source", "max_degree", "diameter_bound", "vertex_bound", "vacuous"}, {}};
        t.rows.push_back({fmt(kappa), source, std::to_string(max_degree), std::to_string(diam.bound),
                          std::to_string(count_bound), diam.vacuous ? "true" : "false"});
        emit(t, format, out);
      }
      return 0;
    }

    if (verify->parsed()) {
      const auto fam = catalog_family_from_string(family_name);
      if (!fam) throw Error(ErrorCode::BadParams, "unknown family '" + family_name + "'");
      const auto h = parse_cost(hspec);
      const auto inst = catalog_instance(*fam, n);
      const auto opt = solver.options();
      bool all = true;
      auto line = [&](bool ok, const std::string& what, const std::string& solver_value,
                      const std::string& formula) {
        all = all && ok;
        out << (ok ? "PASS " : "FAIL ") << family_name << " " << n << " " << what << " solver=" << solver_value
            << " formula=" << formula << "\n";
      };
      for (const Rational& a : parse_alphas(alphas)) {
        const auto vals = catalog(*fam, n, h, a);
        const Rational k = orc_alpha(inst.graph, inst.x, inst.y, a);
        line(k == *vals.kappa_alpha, "kappa(alpha=" + to_string(a) + ")", to_string(k), to_string(*vals.kappa_alpha));
        const KappaH kh = orc_alpha_h(inst.graph, h, inst.x, inst.y, a, opt);
        line(std::abs(kh.value - *vals.kappa_h_alpha) <= 1e-9, "kappa_h(alpha=" + to_string(a) + ")",
             fmt(kh.value), fmt(*vals.kappa_h_alpha));
      }
      const auto vals = catalog(*fam, n, h);
      const LlyResult l = lly(inst.graph, inst.x, inst.y);
      line(l.value == vals.kappa, "lly", to_string(l.value), to_string(vals.kappa));
      return all ? 0 : 1;
    }

    const Hypergraph g = load_graph(graph, allow_nonsimple);

    if (validate->parsed()) {
      const auto& rep = g.validation();
      Table t{{"vertices", "hyperedges", "connected", "simple", "loop_free", "valid"}, {}};
      auto b = [](bool v) { return std::string(v ? "true" : "false"); };
      t.rows.push_back({std::to_string(g.num_vertices()), std::to_string(g.num_edges()), b(rep.connected),
                        b(rep.simple), b(rep.loop_free), b(rep.ok())});
      emit(t, format, out);
      for (const auto& v : rep.violations) err << "violation: " << v << "\n";
      return rep.ok() ? 0 : 1;
    }

    g.require_valid();

    if (dist->parsed()) {
      if (!pair.empty()) {
        auto [x, y] = parse_pair(g, pair);
        Table t{{"x", "y", "d", "deg_x", "deg_y"}, {}};
        t.rows.push_back({g.label(x), g.label(y), std::to_string(g.distance(x, y)), std::to_string(g.degree(x)),
                          std::to_string(g.degree(y))});
        emit(t, format, out);
      } else {
        Table t{{"vertices", "hyperedges", "diameter", "max_degree"}, {}};
        t.rows.push_back({std::to_string(g.num_vertices()), std::to_string(g.num_edges()),
                          std::to_string(g.diameter()), std::to_string(g.max_degree())});
        emit(t, format, out);
      }
      return 0;
    }

    if (w1_cmd->parsed()) {
      auto [mu, nu] = measures.resolve(g);
      const auto r = w1(g, mu, nu);
      if (format == "json") {
        Json j;
        j["w1"] = to_string(r.value);
        Json c = Json::array();
        for (const auto& [p, m] : r.coupling.entries) c.push_back({g.label(p.first), g.label(p.second), to_string(m)});
        j["coupling"] = c;
        out << j.dump(2) << "\n";
      } else {
        Table t{{"from", "to", "mass", "distance"}, {}};
        for (const auto& [p, m] : r.coupling.entries) {
          t.rows.push_back({g.label(p.first), g.label(p.second), to_string(m), std::to_string(g.distance(p.first, p.second))});
        }
        if (format == "table") out << "w1 = " << to_string(r.value) << "\n";
        emit(t, format, out);
      }
      return 0;
    }

    if (wh_cmd->parsed()) {
      const auto h = parse_cost(hspec);
      auto [mu, nu] = measures.resolve(g);
      const auto opt = solver.options();
      const WhResult r = opt.heuristic_only ? wh_heuristic(g, h, mu, nu) : wh_exact(g, h, mu, nu, opt.wh);
      const WhBounds b = wh_bounds(g, h, mu, nu);
      if (format == "json") {
        Json j;
        j["wh"] = fmt(r.value);
        j["status"] = std::string(to_string(r.optimality));
        j["lower_bound"] = fmt(b.lower);
        j["upper_bound"] = fmt(b.upper);
        j["states_expanded"] = r.states_expanded;
        j["denominator"] = r.denominator;
        j["plan"] = to_json(g, r.plan);
        out << j.dump(2) << "\n";
      } else {
        Table t{{"wh", "status", "lower_bound", "upper_bound", "states_expanded", "denominator", "steps"}, {}};
        t.rows.push_back({fmt(r.value), std::string(to_string(r.optimality)), fmt(b.lower), fmt(b.upper),
                          std::to_string(r.states_expanded), std::to_string(r.denominator),
                          std::to_string(r.plan.steps.size())});
        emit(t, format, out);
        if (format == "table") {
          const auto masses = step_masses(g, r.plan);
          for (std::size_t i = 0; i < r.plan.steps.size(); ++i) {
            out << "step " << i + 1 << " edge #" << r.plan.steps[i].edge << " mass " << to_string(masses[i]) << ":";
            for (const auto& mv : r.plan.steps[i].moves) {
              out << " " << g.label(mv.from) << "->" << g.label(mv.to) << " " << to_string(mv.mass);
            }
            out << "\n";
          }
        }
      }
      return 0;
    }

    if (cost_cmd->parsed()) {
      const auto h = parse_cost(hspec);
      const TransportPlan plan = plan_from_json(g, json_arg(plan_text));
      const auto masses = step_masses(g, plan);
      const double c = plan_cost(g, h, plan);
      Table t{{"step", "edge", "mass", "cost"}, {}};
      for (std::size_t i = 0; i < masses.size(); ++i) {
        t.rows.push_back({std::to_string(i + 1), std::to_string(plan.steps[i].edge), to_string(masses[i]),
                          fmt(h.eval(masses[i]))});
      }
      t.rows.push_back({"total", "", "", fmt(c)});
      emit(t, format, out);
      return 0;
    }

    if (curv->parsed()) {
      const auto h = parse_cost(hspec);
      emit(curvature_table(g, h, select_pairs(g, pair, pairs), parse_alphas(alphas), solver.options()), format, out);
      return 0;
    }

    if (sweep->parsed()) {
      const auto h = parse_cost(hspec);
      std::vector<Rational> grid;
      for (int k = 0; k <= grid_points; ++k) grid.push_back(Rational(k, grid_points));
      emit(curvature_table(g, h, {parse_pair(g, pair)}, grid, solver.options()), format, out);
      return 0;
    }

    if (limit->parsed()) {
      auto [x, y] = parse_pair(g, pair);
      const LlyResult l = lly(g, x, y);
      Table t{{"x", "y", "d", "lly", "lly_kind", "hlly_estimate", "hlly_last_ratio", "hlly_converged", "hlly_status"}, {}};
      std::vector<std::string> row{g.label(x), g.label(y), std::to_string(g.distance(x, y)), to_string(l.value),
                                   l.graph ? "exact" : "stabilized-dyadic"};
      const auto h = parse_cost(hspec);
      const HllyResult r = hlly(g, h, x, y, default_hlly_grid(), solver.options());
      const bool exact = std::all_of(r.status.begin(), r.status.end(), [](Optimality o) { return o == Optimality::exact; });
      row.insert(row.end(), {fmt(r.estimate), fmt(r.last_ratio), r.converged ? "true" : "false",
                             exact ? "exact" : "heuristic-upper-bound"});
      t.rows.push_back(row);
      emit(t, format, out);
      if (format == "table") {
        for (std::size_t i = 0; i < r.alphas.size(); ++i) {
          out << "  alpha=" << to_string(r.alphas[i]) << " ratio=" << fmt(r.ratios[i]) << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hypercurv
