#pragma once

#include "hypercurv/hypergraph.hpp"
#include "hypercurv/measure.hpp"

#include <cstdint>
#include <random>

namespace hypercurv {

struct RandomShape {
  int min_vertices = 3;
  int max_vertices = 7;
  int max_edges = 4;
  int max_edge_size = 4;
};

// Connected simple hypergraph on labels v0..v{n-1}, by rejection sampling.
Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomShape& shape = {});

// Measure on the 1/denominator grid with at most `max_support` atoms.
ProbMeasure random_measure(std::mt19937_64& rng, const Hypergraph& g, std::int64_t denominator,
                           int max_support = 3);

}  // namespace hypercurv
