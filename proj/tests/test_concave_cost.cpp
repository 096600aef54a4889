#include "hypercurv/concave_cost.hpp"
#include "hypercurv/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace hypercurv;

TEST_CASE("closed-form constants") {
  const ConcaveCost lg = ConcaveCost::log(Rational(1));
  CHECK(lg.h1() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(lg.hp0() == doctest::Approx(1.0));
  CHECK(lg.hp1() == doctest::Approx(0.5));

  const ConcaveCost tr = ConcaveCost::truncation(Rational(1, 2));
  CHECK(tr.h1() == 0.5);
  CHECK(tr.hp0() == 1.0);
  CHECK(tr.hp1() == 0.0);

  const ConcaveCost lin = ConcaveCost::linear(Rational(3, 2));
  CHECK(lin.h1() == 1.5);
  CHECK(lin.hp0() == 1.5);
  CHECK(lin.hp1() == 1.5);

  const ConcaveCost pw = ConcaveCost::power(Rational(1, 2));
  CHECK_FALSE(pw.hp0_finite());
  CHECK(pw.h1() == 1.0);
  CHECK(pw.hp1() == doctest::Approx(0.5));

  const ConcaveCost combo = ConcaveCost::trunc_log_combo(Rational(1, 4));
  CHECK(combo.h1() == doctest::Approx(0.25 + std::log(1.75)));
  CHECK(combo.hp0() == doctest::Approx(1.0));
  CHECK(combo.hp1() == doctest::Approx(1.0 / 1.75));
}

TEST_CASE("evaluation") {
  const ConcaveCost lg = ConcaveCost::log(Rational(2));
  CHECK(lg.eval(Rational(0)) == 0.0);
  CHECK(lg.eval(Rational(1, 4)) == doctest::Approx(2 * std::log(1.25)));
  const ConcaveCost tr = ConcaveCost::truncation(Rational(1, 2));
  CHECK(tr.eval(Rational(3, 10)) == doctest::Approx(0.3));
  CHECK(tr.eval(Rational(9, 10)) == 0.5);
  try {
    (void)tr.eval(Rational(11, 10));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LambdaOutOfRange);
  }
  CHECK_THROWS_AS(ConcaveCost::power(Rational(2)), Error);
  CHECK_THROWS_AS(ConcaveCost::log(Rational(-1)), Error);
}

TEST_CASE("numeric constants agree with the closed forms") {
  const CostConstants c = numeric_constants([](double t) { return std::log1p(t); });
  CHECK(c.h1 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(c.hp0 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(c.hp1 == doctest::Approx(0.5).epsilon(1e-6));

  const ConcaveCost custom = ConcaveCost::custom([](double t) { return std::sqrt(t + 1) - 1; }, "sqrt");
  CHECK(custom.hp0() == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(custom.hp1() == doctest::Approx(1.0 / (2 * std::sqrt(2.0))).epsilon(1e-6));

  const CostConstants pw = numeric_constants([](double t) { return std::sqrt(t); });
  CHECK(pw.hp0 == std::numeric_limits<double>::infinity());
}

TEST_CASE("tabulated cost") {
  const ConcaveCost t = ConcaveCost::tabulated({0.0, 0.5, 0.75, 1.0});
  CHECK(t.h1() == 1.0);
  CHECK(t.eval(Rational(1, 6)) == doctest::Approx(0.25));
  CHECK(t.hp0() == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(t.hp1() == doctest::Approx(0.75).epsilon(1e-6));
}

TEST_CASE("assumption check") {
  CHECK(check_assumption(ConcaveCost::log(Rational(1))).all_pass());
  CHECK(check_assumption(ConcaveCost::truncation(Rational(1, 2))).all_pass());
  const AssumptionReport convex = check_assumption(ConcaveCost::custom([](double t) { return t * t; }));
  CHECK_FALSE(convex.concave);
  const AssumptionReport shifted = check_assumption(ConcaveCost::custom([](double t) { return t + 1; }));
  CHECK_FALSE(shifted.h0_zero);
  const AssumptionReport power = check_assumption(ConcaveCost::power(Rational(1, 3)));
  CHECK(power.concave);
  CHECK_FALSE(power.hp0_finite_positive);
}
