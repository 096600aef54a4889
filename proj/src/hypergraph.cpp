#include "hypercurv/hypergraph.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace hypercurv {

namespace {

std::string where(const Hypergraph::SourceEdge& e, std::size_t index) {
  if (e.line > 0) return "line " + std::to_string(e.line);
  return "hyperedge #" + std::to_string(index);
}

std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

struct Finding {
  ErrorCode code;
  std::string message;
};

}  // namespace

Hypergraph Hypergraph::from_edges(const std::vector<std::vector<std::string>>& edges,
                                  const ParseOptions& options) {
  std::vector<SourceEdge> src;
  src.reserve(edges.size());
  for (const auto& e : edges) src.push_back({e, 0});
  return from_edges(src, options);
}

Hypergraph Hypergraph::from_edges(const std::vector<SourceEdge>& edges,
                                  const ParseOptions& options) {
  Hypergraph h;
  std::vector<Finding> findings;

  if (edges.empty()) {
    findings.push_back({ErrorCode::EmptyInput, "input contains no hyperedges"});
    h.report_.nonempty = false;
  }

  std::vector<int> edge_line;
  std::vector<std::size_t> edge_source;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<VertexId> ids;
    for (const auto& label : edges[i].labels) {
      auto [it, inserted] = h.index_.try_emplace(label, static_cast<VertexId>(h.labels_.size()));
      if (inserted) h.labels_.push_back(label);
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    h.edges_.push_back(std::move(ids));
    edge_source.push_back(i);
  }

  const std::size_t n = h.labels_.size();
  const std::size_t m = h.edges_.size();

  for (std::size_t e = 0; e < m; ++e) {
    if (h.edges_[e].size() < 2) {
      h.report_.loop_free = false;
      findings.push_back({ErrorCode::LoopFound,
                          where(edges[e], e) + ": hyperedge '" + join(edges[e].labels) +
                              "' has fewer than 2 vertices (loop)"});
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < e; ++f) {
      if (h.edges_[e] == h.edges_[f]) {
        h.report_.no_duplicates = false;
        findings.push_back({ErrorCode::DuplicateHyperedge,
                            where(edges[e], e) + ": hyperedge '" + join(edges[e].labels) +
                                "' duplicates " + where(edges[f], f)});
        break;
      }
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      if (e == f || h.edges_[e] == h.edges_[f]) continue;
      const auto& small = h.edges_[e];
      const auto& big = h.edges_[f];
      if (small.size() < big.size() &&
          std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        h.report_.simple = false;
        findings.push_back({ErrorCode::NotSimple,
                            where(edges[e], e) + ": hyperedge '" + join(edges[e].labels) +
                                "' is contained in " + where(edges[f], f)});
        break;
      }
    }
  }

  h.membership_.assign(m * n, 0);
  h.incidence_.assign(n, {});
  for (std::size_t e = 0; e < m; ++e) {
    for (VertexId v : h.edges_[e]) {
      h.membership_[e * n + static_cast<std::size_t>(v)] = 1;
      h.incidence_[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(e));
    }
  }
  h.neighbors_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    std::set<VertexId> nb;
    for (EdgeId e : h.incidence_[v]) {
      for (VertexId w : h.edges_[static_cast<std::size_t>(e)]) {
        if (w != static_cast<VertexId>(v)) nb.insert(w);
      }
    }
    h.neighbors_[v].assign(nb.begin(), nb.end());
  }

  h.dist_.assign(n * n, kUnreachable);
  for (std::size_t s = 0; s < n; ++s) {
    int* row = &h.dist_[s * n];
    row[s] = 0;
    std::deque<VertexId> queue{static_cast<VertexId>(s)};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : h.neighbors_[static_cast<std::size_t>(u)]) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  if (n > 0) {
    for (std::size_t v = 0; v < n; ++v) {
      if (h.dist_[v] == kUnreachable) {
        h.report_.connected = false;
        findings.push_back({ErrorCode::NotConnected,
                            "vertex '" + h.labels_[v] + "' is not reachable from '" +
                                h.labels_[0] + "' (hypergraph not connected)"});
        break;
      }
    }
  }

  for (const auto& f : findings) h.report_.violations.push_back(f.message);
  if (!options.allow_nonsimple && !findings.empty()) {
    // Report the most basic failure first: empty, loop, duplicate, nesting, connectivity.
    throw Error(findings.front().code, findings.front().message);
  }
  return h;
}

std::optional<VertexId> Hypergraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Hypergraph::id(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

int Hypergraph::max_degree() const {
  int best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

int Hypergraph::diameter() const {
  int best = 0;
  for (int d : dist_) {
    if (d == kUnreachable) return kUnreachable;
    best = std::max(best, d);
  }
  return best;
}

std::vector<VertexId> Hypergraph::sphere(VertexId v, int radius) const {
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < num_vertices(); ++w) {
    if (distance(v, static_cast<VertexId>(w)) == radius) out.push_back(static_cast<VertexId>(w));
  }
  return out;
}

std::vector<VertexId> Hypergraph::ball(VertexId v, int radius) const {
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < num_vertices(); ++w) {
    int d = distance(v, static_cast<VertexId>(w));
    if (d != kUnreachable && d <= radius) out.push_back(static_cast<VertexId>(w));
  }
  return out;
}

void Hypergraph::require_valid() const {
  if (!is_valid()) {
    throw Error(ErrorCode::InvalidHypergraph,
                "hypergraph is not connected and simple: " + report_.violations.front());
  }
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  auto canon = [](const Hypergraph& h) {
    std::set<std::set<std::string>> edges;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::set<std::string> s;
      for (VertexId v : h.edge(static_cast<EdgeId>(e))) s.insert(h.label(v));
      edges.insert(std::move(s));
    }
    std::set<std::string> verts(h.labels().begin(), h.labels().end());
    return std::make_pair(verts, edges);
  };
  return canon(a) == canon(b);
}

namespace {

std::vector<Hypergraph::SourceEdge> tokenize(std::string_view text) {
  std::vector<Hypergraph::SourceEdge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    Hypergraph::SourceEdge e;
    e.line = lineno;
    std::string w;
    while (words >> w) e.labels.push_back(w);
    edges.push_back(std::move(e));
  }
  return edges;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text, const ParseOptions& options) {
  return Hypergraph::from_edges(tokenize(text), options);
}

Hypergraph load_hypergraph(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str(), options);
}

std::string to_hg(const Hypergraph& h) {
  std::string out;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (VertexId v : h.edge(static_cast<EdgeId>(e))) {
      if (!first) out += ' ';
      out += h.label(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

ValidationReport validate_hypergraph_text(std::string_view text) {
  return parse_hypergraph(text, ParseOptions{.allow_nonsimple = true}).validation();
}

int graph_distance(const Hypergraph& h, std::string_view x, std::string_view y) {
  int d = h.distance(h.id(x), h.id(y));
  if (d == kUnreachable) {
    throw Error(ErrorCode::NotConnected,
                "no path between '" + std::string(x) + "' and '" + std::string(y) + "'");
  }
  return d;
}

int degree(const Hypergraph& h, std::string_view x) { return h.degree(h.id(x)); }

int diameter(const Hypergraph& h) {
  h.require_valid();
  return h.diameter();
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "path" || name == "line") return Family::path;
  if (name == "ladder") return Family::ladder;
  if (name == "grid9") return Family::grid9;
  return std::nullopt;
}

Hypergraph generate(Family family, int n) {
  using Edges = std::vector<std::vector<std::string>>;
  Edges edges;
  auto s = [](int i) { return std::to_string(i); };
  switch (family) {
    case Family::complete:
      if (n < 2) throw Error(ErrorCode::BadParams, "complete graph needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({s(i), s(j)});
      break;
    case Family::cycle:
      if (n < 2) throw Error(ErrorCode::BadParams, "cycle needs n >= 2");
      if (n == 2) return generate(Family::complete, 2);
      for (int i = 0; i < n; ++i) edges.push_back({s(i), s((i + 1) % n)});
      break;
    case Family::path:
      if (n < 1) throw Error(ErrorCode::BadParams, "path needs n >= 1 edges");
      for (int i = 0; i < n; ++i) edges.push_back({s(i), s(i + 1)});
      break;
    case Family::ladder:
      if (n < 1) throw Error(ErrorCode::BadParams, "ladder needs n >= 1 rungs apart");
      for (int i = 0; i < n; ++i) {
        edges.push_back({"a" + s(i), "a" + s(i + 1)});
        edges.push_back({"b" + s(i), "b" + s(i + 1)});
      }
      for (int i = 0; i <= n; ++i) edges.push_back({"a" + s(i), "b" + s(i)});
      break;
    case Family::grid9:
      // v1 v2 v3 bottom row, v4 x v6 middle row, y v8 v9 top row.
      edges = {{"v2", "x", "v6", "v3"},
               {"v1", "v4", "x", "v2"},
               {"x", "v8", "v9", "v6"},
               {"v4", "y", "v8", "x"}};
      break;
  }
  return Hypergraph::from_edges(edges);
}

Hypergraph clique_expansion(const Hypergraph& h) {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto verts = h.edge(static_cast<EdgeId>(e));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) pairs.insert({verts[i], verts[j]});
  }
  std::vector<std::vector<std::string>> edges;
  for (auto [a, b] : pairs) edges.push_back({h.label(a), h.label(b)});
  return Hypergraph::from_edges(edges, ParseOptions{.allow_nonsimple = !h.is_valid()});
}

}  // namespace hypercurv
