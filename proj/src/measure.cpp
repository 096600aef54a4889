#include "hypercurv/measure.hpp"

#include "hypercurv/error.hpp"

namespace hypercurv {

ProbMeasure::ProbMeasure(const Hypergraph& h, Weights weights) {
  Rational total = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    const auto& [v, w] = *it;
    if (v < 0 || static_cast<std::size_t>(v) >= h.num_vertices()) {
      throw Error(ErrorCode::SupportOutsideVertexSet,
                  "measure puts mass on vertex id " + std::to_string(v) +
                      " outside the vertex set");
    }
    if (w < 0 || w > 1) {
      throw Error(ErrorCode::InvalidMeasure,
                  "weight " + to_string(w) + " at '" + h.label(v) + "' is outside [0,1]");
    }
    total += w;
    if (w == 0) {
      it = weights.erase(it);
    } else {
      ++it;
    }
  }
  if (total != 1) {
    throw Error(ErrorCode::InvalidMeasure, "weights sum to " + to_string(total) + ", not 1");
  }
  weights_ = std::move(weights);
}

ProbMeasure ProbMeasure::from_units(const Hypergraph& h, std::span<const std::int64_t> units,
                                    std::int64_t denominator) {
  Weights w;
  for (std::size_t v = 0; v < units.size(); ++v) {
    if (units[v] != 0) w[static_cast<VertexId>(v)] = Rational(units[v], denominator);
  }
  return ProbMeasure(h, std::move(w));
}

Rational ProbMeasure::at(VertexId v) const {
  auto it = weights_.find(v);
  return it == weights_.end() ? Rational(0) : it->second;
}

std::vector<VertexId> ProbMeasure::support() const {
  std::vector<VertexId> out;
  out.reserve(weights_.size());
  for (const auto& [v, w] : weights_) out.push_back(v);
  return out;
}

BigInt ProbMeasure::denominator() const {
  BigInt d = 1;
  for (const auto& [v, w] : weights_) d = lcm(d, boost::multiprecision::denominator(w));
  return d;
}

Units ProbMeasure::to_units(std::size_t num_vertices, std::int64_t denominator) const {
  Units out(num_vertices, 0);
  for (const auto& [v, w] : weights_) {
    Rational scaled = w * denominator;
    if (boost::multiprecision::denominator(scaled) != 1) {
      throw Error(ErrorCode::InfeasibleQuantization,
                  "weight " + to_string(w) + " is not on the 1/" + std::to_string(denominator) +
                      " grid");
    }
    out.at(static_cast<std::size_t>(v)) =
        boost::multiprecision::numerator(scaled).convert_to<std::int64_t>();
  }
  return out;
}

SignedDelta::SignedDelta(Entries entries) {
  Rational total = 0;
  for (auto it = entries.begin(); it != entries.end();) {
    total += it->second;
    if (it->second == 0) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
  if (total != 0) {
    throw Error(ErrorCode::InvalidMeasure, "signed delta sums to " + to_string(total));
  }
  entries_ = std::move(entries);
}

SignedDelta SignedDelta::between(const ProbMeasure& before, const ProbMeasure& after) {
  Entries e;
  for (const auto& [v, w] : after.weights()) e[v] += w;
  for (const auto& [v, w] : before.weights()) e[v] -= w;
  return SignedDelta(std::move(e));
}

Rational SignedDelta::sum() const {
  Rational s = 0;
  for (const auto& [v, d] : entries_) s += d;
  return s;
}

Rational SignedDelta::half_l1() const {
  Rational s = 0;
  for (const auto& [v, d] : entries_) s += boost::multiprecision::abs(d);
  return s / 2;
}

ProbMeasure dirac(const Hypergraph& h, VertexId x) {
  if (x < 0 || static_cast<std::size_t>(x) >= h.num_vertices()) {
    throw Error(ErrorCode::UnknownVertex, "unknown vertex id " + std::to_string(x));
  }
  return ProbMeasure(h, {{x, Rational(1)}});
}

ProbMeasure lazy_random_walk(const Hypergraph& h, VertexId x, const Rational& alpha) {
  if (x < 0 || static_cast<std::size_t>(x) >= h.num_vertices()) {
    throw Error(ErrorCode::UnknownVertex, "unknown vertex id " + std::to_string(x));
  }
  if (alpha < 0 || alpha > 1) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha " + to_string(alpha) + " is outside [0,1]");
  }
  auto nb = h.neighbors(x);
  ProbMeasure::Weights w;
  if (alpha != 0) w[x] = alpha;
  if (alpha != 1) {
    if (nb.empty()) {
      throw Error(ErrorCode::InvalidHypergraph,
                  "vertex '" + h.label(x) + "' has no neighbours");
    }
    Rational share = (1 - alpha) / static_cast<long long>(nb.size());
    for (VertexId v : nb) w[v] = share;
  }
  return ProbMeasure(h, std::move(w));
}

BigInt common_denominator(std::span<const ProbMeasure> measures) {
  BigInt d = 1;
  for (const auto& m : measures) d = lcm(d, m.denominator());
  return d;
}

}  // namespace hypercurv
