#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypercurv {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr int kUnreachable = -1;

struct ValidationReport {
  bool connected = true;
  bool simple = true;
  bool loop_free = true;
  bool nonempty = true;
  bool no_duplicates = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

struct ParseOptions {
  // Keeps loops, nested/duplicate hyperedges and disconnected inputs instead
  // of rejecting them. Such hypergraphs can be inspected but every solver
  // refuses them (see Hypergraph::require_valid).
  bool allow_nonsimple = false;
};

/// Undirected hypergraph over opaque string labels.
///
/// Vertices get dense ids in order of first appearance. The all-pairs graph
/// distance (number of hyperedges on a shortest path) is computed once at
/// construction; the object is immutable afterwards.
class Hypergraph {
 public:
  struct SourceEdge {
    std::vector<std::string> labels;
    int line = 0;  // 0 when the edge did not come from a file
  };

  static Hypergraph from_edges(const std::vector<SourceEdge>& edges,
                               const ParseOptions& options = {});
  static Hypergraph from_edges(const std::vector<std::vector<std::string>>& edges,
                               const ParseOptions& options = {});

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  // Throws UnknownVertex.
  VertexId id(std::string_view label) const;

  std::span<const VertexId> edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  bool edge_contains(EdgeId e, VertexId v) const {
    return membership_[static_cast<std::size_t>(e) * labels_.size() + static_cast<std::size_t>(v)] != 0;
  }
  std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  std::span<const VertexId> neighbors(VertexId v) const { return neighbors_.at(static_cast<std::size_t>(v)); }

  int distance(VertexId a, VertexId b) const {
    return dist_[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)];
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  // kUnreachable when disconnected.
  int diameter() const;
  bool adjacent(VertexId a, VertexId b) const { return a != b && distance(a, b) == 1; }

  std::vector<VertexId> sphere(VertexId v, int radius) const;
  std::vector<VertexId> ball(VertexId v, int radius) const;

  const ValidationReport& validation() const { return report_; }
  bool is_valid() const { return report_.ok(); }
  // Throws InvalidHypergraph naming the first violation.
  void require_valid() const;

  // Same label set and same family of hyperedges (as label sets), ignoring order.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<char> membership_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<int> dist_;
  ValidationReport report_;
};

// `.hg` text: one hyperedge per line, whitespace separated labels, `#`
// comment lines, blank lines ignored.
Hypergraph parse_hypergraph(std::string_view text, const ParseOptions& options = {});
Hypergraph load_hypergraph(const std::string& path, const ParseOptions& options = {});
std::string to_hg(const Hypergraph& h);

// Validation without throwing; the input is parsed leniently.
ValidationReport validate_hypergraph_text(std::string_view text);

int graph_distance(const Hypergraph& h, std::string_view x, std::string_view y);
int degree(const Hypergraph& h, std::string_view x);
int diameter(const Hypergraph& h);

enum class Family { complete, cycle, path, ladder, grid9 };

std::optional<Family> family_from_string(std::string_view name);

// complete(n >= 2): labels 0..n-1.
// cycle(n >= 2): ring 0..n-1; cycle(2) is K_2.
// path(n >= 1): n edges on labels 0..n.
// ladder(n >= 1): bottom row a0..an, top row b0..bn, rungs ai-bi.
// grid9: the 3x3 grid covered by its four 2x2 blocks; the centre is "x" and
//   the top-left corner is "y". Hyperedge order is cyan, orange, green, red.
Hypergraph generate(Family family, int n = 0);

Hypergraph clique_expansion(const Hypergraph& h);

}  // namespace hypercurv
