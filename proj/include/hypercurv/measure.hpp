#pragma once

#include "hypercurv/hypergraph.hpp"
#include "hypercurv/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace hypercurv {

using Units = std::vector<std::int64_t>;

/// Finitely supported probability measure on the vertices of a hypergraph,
/// stored sparsely with exact rational weights. Zero weights are never
/// stored and the weights sum to exactly one.
class ProbMeasure {
 public:
  using Weights = std::map<VertexId, Rational>;

  ProbMeasure() = default;
  // Throws InvalidMeasure (negative weight, weight > 1, sum != 1) or
  // SupportOutsideVertexSet.
  ProbMeasure(const Hypergraph& h, Weights weights);

  // Mass units[v] / denominator at each vertex.
  static ProbMeasure from_units(const Hypergraph& h, std::span<const std::int64_t> units,
                                std::int64_t denominator);

  const Weights& weights() const { return weights_; }
  Rational at(VertexId v) const;
  std::size_t support_size() const { return weights_.size(); }
  std::vector<VertexId> support() const;

  // Least common multiple of the weight denominators.
  BigInt denominator() const;

  // Dense integer masses on the 1/denominator grid. Throws
  // InfeasibleQuantization when a weight is not a multiple of 1/denominator.
  Units to_units(std::size_t num_vertices, std::int64_t denominator) const;

  friend bool operator==(const ProbMeasure& a, const ProbMeasure& b) {
    return a.weights_ == b.weights_;
  }

 private:
  Weights weights_;
};

/// Difference of two probability measures; entries sum to zero.
class SignedDelta {
 public:
  using Entries = std::map<VertexId, Rational>;

  SignedDelta() = default;
  // Throws InvalidMeasure when the entries do not sum to zero.
  explicit SignedDelta(Entries entries);

  // after - before
  static SignedDelta between(const ProbMeasure& before, const ProbMeasure& after);

  const Entries& entries() const { return entries_; }
  Rational sum() const;
  // (1/2) * sum |delta(v)|
  Rational half_l1() const;

 private:
  Entries entries_;
};

ProbMeasure dirac(const Hypergraph& h, VertexId x);

// alpha at x, (1 - alpha) / d_x at each neighbour.
ProbMeasure lazy_random_walk(const Hypergraph& h, VertexId x, const Rational& alpha);

// lcm of all weight denominators; 1 for an empty list.
BigInt common_denominator(std::span<const ProbMeasure> measures);

}  // namespace hypercurv
