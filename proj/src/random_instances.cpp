#include "hypercurv/random_instances.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hypercurv {

Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomShape& shape) {
  std::uniform_int_distribution<int> nv(shape.min_vertices, shape.max_vertices);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int n = nv(rng);
    std::uniform_int_distribution<int> ne(1, shape.max_edges);
    std::uniform_int_distribution<int> size(2, std::min(shape.max_edge_size, n));
    const int m = ne(rng);
    std::vector<std::vector<std::string>> edges;
    std::set<int> covered;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int e = 0; e < m; ++e) {
      std::shuffle(order.begin(), order.end(), rng);
      const int k = size(rng);
      std::vector<int> pick(order.begin(), order.begin() + k);
      std::sort(pick.begin(), pick.end());
      std::vector<std::string> labels;
      for (int v : pick) {
        labels.push_back("v" + std::to_string(v));
        covered.insert(v);
      }
      edges.push_back(std::move(labels));
    }
    if (static_cast<int>(covered.size()) != n) continue;
    Hypergraph g = Hypergraph::from_edges(edges, ParseOptions{true});
    if (g.is_valid()) return Hypergraph::from_edges(edges);
  }
  throw Error(ErrorCode::BadParams, "could not sample a connected simple hypergraph");
}

ProbMeasure random_measure(std::mt19937_64& rng, const Hypergraph& g, std::int64_t denominator,
                           int max_support) {
  const auto n = static_cast<int>(g.num_vertices());
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> support(1, std::max(1, std::min(max_support, n)));
  const int k = support(rng);
  std::vector<VertexId> atoms;
  while (static_cast<int>(atoms.size()) < k) {
    const auto v = static_cast<VertexId>(vertex(rng));
    if (std::find(atoms.begin(), atoms.end(), v) == atoms.end()) atoms.push_back(v);
  }
  std::vector<std::int64_t> units(atoms.size(), 0);
  std::uniform_int_distribution<std::size_t> slot(0, atoms.size() - 1);
  for (std::int64_t u = 0; u < denominator; ++u) ++units[slot(rng)];
  ProbMeasure::Weights w;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (units[i] > 0) w[atoms[i]] = Rational(units[i], denominator);
  }
  return ProbMeasure(g, std::move(w));
}

}  // namespace hypercurv
