#include "fixtures.hpp"
#include "hypercurv/error.hpp"
#include "hypercurv/w1.hpp"
#include "hypercurv/wh.hpp"

#include <doctest.h>

using namespace hypercurv;

namespace {

// Half the mass goes around each side of C_4.
TransportPlan split_plan(const Hypergraph& g) {
  const Rational half(1, 2);
  return fixture::make_plan(g, dirac(g, g.id("0")), dirac(g, g.id("2")),
                            {{{"0", "1"}, {{"0", "1", half}}},
                             {{"0", "3"}, {{"0", "3", half}}},
                             {{"1", "2"}, {{"1", "2", half}}},
                             {{"2", "3"}, {{"3", "2", half}}}});
}

}  // namespace

TEST_CASE("two paths of one pair merge into one") {
  const Hypergraph g = generate(Family::cycle, 4);
  const ConcaveCost h = ConcaveCost::log(Rational(1));
  const TransportPlan plan = split_plan(g);
  const Coupling pi = w1(g, plan.start, plan.end).coupling;
  const auto before = transport_path_counts(g, plan);
  CHECK(before.at({g.id("0"), g.id("2")}) == 2);

  const TransportPlan out = normalize_plan(g, h, plan, pi);
  const auto after = transport_path_counts(g, out);
  CHECK(after.at({g.id("0"), g.id("2")}) == 1);
  CHECK(out.steps.size() == 2);
  CHECK(plan_cost(g, h, out) <= plan_cost(g, h, plan));
  CHECK(plan_cost(g, h, out) == doctest::Approx(2 * std::log(2.0)));
  CHECK(glue(g, out).entries == glue(g, plan).entries);
  CHECK(intermediates(g, out).back() == plan.end);
}

TEST_CASE("a plan with one path per pair is left alone") {
  const Hypergraph g = generate(Family::path, 2);
  const ConcaveCost h = ConcaveCost::truncation(Rational(1, 2));
  const Rational half(1, 2);
  const ProbMeasure mu(g, {{g.id("0"), half}, {g.id("1"), half}});
  const ProbMeasure nu(g, {{g.id("1"), half}, {g.id("2"), half}});
  const TransportPlan plan =
      fixture::make_plan(g, mu, nu, {{{"1", "2"}, {{"1", "2", half}}}, {{"0", "1"}, {{"0", "1", half}}}});
  const Coupling pi = glue(g, plan);
  CHECK(pi.has_marginals());
  const TransportPlan out = normalize_plan(g, h, plan, pi);
  CHECK(out.steps == plan.steps);

  Coupling other = pi;
  other.entries = {{{g.id("0"), g.id("2")}, half}, {{g.id("1"), g.id("1")}, half}};
  CHECK(other.has_marginals());
  try {
    normalize_plan(g, h, plan, other);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociated);
  }
}

TEST_CASE("steps must not send and receive at one vertex") {
  const Hypergraph g = generate(Family::complete, 3);
  const Rational q(1, 4);
  const ProbMeasure mu(g, {{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  TransportPlan plan{mu, mu, {{0, {{0, 1, q}, {1, 0, q}}}}};
  try {
    normalize_plan(g, ConcaveCost::log(Rational(1)), plan, glue(g, plan));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPlan);
  }
}
