#pragma once

#include "hypercurv/rational.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hypercurv {

enum class CostFamily { linear, log, truncation, trunc_log_combo, power, tabulated, custom };

std::string_view to_string(CostFamily family);

// h(1), h'(0) = lim h(t)/t and h'(1) = lim (h(1) - h(t)) / (1 - t).
// hp0 is +infinity for the power family.
struct CostConstants {
  double h1 = 0;
  double hp0 = 0;
  double hp1 = 0;
  // Zero for the closed-form families; extrapolation error otherwise.
  double error_estimate = 0;
};

struct AssumptionReport {
  bool h0_zero = false;
  bool monotone = false;
  bool concave = false;
  bool hp0_finite_positive = false;
  std::vector<std::string> notes;

  bool all_pass() const { return h0_zero && monotone && concave && hp0_finite_positive; }
};

/// The discount function h: [0,1] -> [0, inf) charged on the mass moved in a
/// single step. Built-in families carry a positive rational parameter `a`:
///
///   linear           a t
///   log              a log(1 + t)
///   truncation       min(a, t)
///   trunc_log_combo  min(a, t) + log(1 + max(t - a, 0))
///   power            t^a, 0 < a <= 1 (h'(0) diverges for a < 1)
///
/// Tabulated and custom functions get their derivative constants from
/// one-sided difference quotients with Richardson extrapolation.
class ConcaveCost {
 public:
  static ConcaveCost linear(const Rational& a);
  static ConcaveCost log(const Rational& a);
  static ConcaveCost truncation(const Rational& a);
  static ConcaveCost trunc_log_combo(const Rational& a);
  static ConcaveCost power(const Rational& a);
  // values[k] = h(k / N) for N = values.size() - 1, linear in between.
  static ConcaveCost tabulated(std::vector<double> values);
  static ConcaveCost custom(std::function<double(double)> fn, std::string name = "custom");

  CostFamily family() const { return family_; }
  const Rational& a() const { return a_; }
  const std::vector<double>& table() const { return table_; }

  // No range check; the search calls this in its inner loop.
  double operator()(double t) const;
  // Throws LambdaOutOfRange outside [0,1]; eval(0) == 0 exactly.
  double eval(const Rational& lambda) const;

  const CostConstants& constants() const { return constants_; }
  double h1() const { return constants_.h1; }
  double hp0() const { return constants_.hp0; }
  double hp1() const { return constants_.hp1; }
  bool hp0_finite() const { return constants_.hp0 < std::numeric_limits<double>::infinity(); }

  std::string describe() const;

 private:
  ConcaveCost(CostFamily family, Rational a) : family_(family), a_(std::move(a)) {}
  void compute_constants();

  CostFamily family_;
  Rational a_;
  double a_double_ = 0;
  std::vector<double> table_;
  std::shared_ptr<const std::function<double(double)>> fn_;
  std::string name_;
  CostConstants constants_;
};

double eval(const ConcaveCost& h, const Rational& lambda);
CostConstants constants(const ConcaveCost& h);
AssumptionReport check_assumption(const ConcaveCost& h);

// Difference-quotient estimates used for tabulated and custom functions.
CostConstants numeric_constants(const std::function<double(double)>& h);

}  // namespace hypercurv
