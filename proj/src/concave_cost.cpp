#include "hypercurv/concave_cost.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <cmath>

namespace hypercurv {

std::string_view to_string(CostFamily family) {
  switch (family) {
    case CostFamily::linear: return "linear";
    case CostFamily::log: return "log";
    case CostFamily::truncation: return "truncation";
    case CostFamily::trunc_log_combo: return "trunc_log_combo";
    case CostFamily::power: return "power";
    case CostFamily::tabulated: return "tabulated";
    case CostFamily::custom: return "custom";
  }
  return "unknown";
}

namespace {

void require_positive(const Rational& a, std::string_view family) {
  if (a <= 0) {
    throw Error(ErrorCode::InvalidCost,
                std::string(family) + " parameter a must be positive, got " + to_string(a));
  }
}

}  // namespace

ConcaveCost ConcaveCost::linear(const Rational& a) {
  require_positive(a, "linear");
  ConcaveCost h(CostFamily::linear, a);
  h.compute_constants();
  return h;
}

ConcaveCost ConcaveCost::log(const Rational& a) {
  require_positive(a, "log");
  ConcaveCost h(CostFamily::log, a);
  h.compute_constants();
  return h;
}

ConcaveCost ConcaveCost::truncation(const Rational& a) {
  require_positive(a, "truncation");
  ConcaveCost h(CostFamily::truncation, a);
  h.compute_constants();
  return h;
}

ConcaveCost ConcaveCost::trunc_log_combo(const Rational& a) {
  require_positive(a, "trunc_log_combo");
  ConcaveCost h(CostFamily::trunc_log_combo, a);
  h.compute_constants();
  return h;
}

ConcaveCost ConcaveCost::power(const Rational& a) {
  require_positive(a, "power");
  if (a > 1) throw Error(ErrorCode::InvalidCost, "power exponent must lie in (0,1]");
  ConcaveCost h(CostFamily::power, a);
  h.compute_constants();
  return h;
}

ConcaveCost ConcaveCost::tabulated(std::vector<double> values) {
  if (values.size() < 2) throw Error(ErrorCode::InvalidCost, "tabulated h needs at least 2 values");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidCost, "tabulated h has a non-finite value");
  }
  ConcaveCost h(CostFamily::tabulated, Rational(0));
  h.table_ = std::move(values);
  h.compute_constants();
  return h;
}

ConcaveCost ConcaveCost::custom(std::function<double(double)> fn, std::string name) {
  ConcaveCost h(CostFamily::custom, Rational(0));
  h.fn_ = std::make_shared<const std::function<double(double)>>(std::move(fn));
  h.name_ = std::move(name);
  h.compute_constants();
  return h;
}

double ConcaveCost::operator()(double t) const {
  switch (family_) {
    case CostFamily::linear: return a_double_ * t;
    case CostFamily::log: return a_double_ * std::log1p(t);
    case CostFamily::truncation: return std::min(a_double_, t);
    case CostFamily::trunc_log_combo:
      return std::min(a_double_, t) + std::log1p(std::max(t - a_double_, 0.0));
    case CostFamily::power: return t <= 0 ? 0.0 : std::pow(t, a_double_);
    case CostFamily::tabulated: {
      const double n = static_cast<double>(table_.size() - 1);
      const double x = std::clamp(t, 0.0, 1.0) * n;
      const auto k = std::min(static_cast<std::size_t>(x), table_.size() - 2);
      const double frac = x - static_cast<double>(k);
      return table_[k] + frac * (table_[k + 1] - table_[k]);
    }
    case CostFamily::custom: return (*fn_)(t);
  }
  return 0;
}

double ConcaveCost::eval(const Rational& lambda) const {
  if (lambda < 0 || lambda > 1) {
    throw Error(ErrorCode::LambdaOutOfRange, "h evaluated at " + to_string(lambda) + " outside [0,1]");
  }
  if (lambda == 0 && family_ != CostFamily::tabulated && family_ != CostFamily::custom) return 0.0;
  return (*this)(to_double(lambda));
}

CostConstants numeric_constants(const std::function<double(double)>& h) {
  // q_k = h(eps)/eps and (h(1) - h(1 - eps))/eps at eps = 2^-k, k = 10..20;
  // first-order Richardson on the last two levels.
  const double h1 = h(1.0);
  std::vector<double> q0, q1;
  for (int k = 10; k <= 20; ++k) {
    const double eps = std::ldexp(1.0, -k);
    q0.push_back((h(eps) - h(0.0)) / eps);
    q1.push_back((h1 - h(1.0 - eps)) / eps);
  }
  auto richardson = [](const std::vector<double>& q, double& err) {
    const std::size_t n = q.size();
    const double r_last = 2 * q[n - 1] - q[n - 2];
    const double r_prev = 2 * q[n - 2] - q[n - 3];
    err = std::abs(r_last - r_prev);
    return r_last;
  };
  CostConstants c;
  double e0 = 0, e1 = 0;
  c.h1 = h1;
  c.hp0 = richardson(q0, e0);
  c.hp1 = richardson(q1, e1);
  // A difference quotient that keeps growing is read as a divergent h'(0).
  if (e0 > 1e-3 * std::max(1.0, std::abs(c.hp0)) && q0.back() > q0.front()) {
    c.hp0 = std::numeric_limits<double>::infinity();
    e0 = 0;
  }
  c.error_estimate = std::max(e0, e1);
  return c;
}

void ConcaveCost::compute_constants() {
  a_double_ = to_double(a_);
  const double a = a_double_;
  switch (family_) {
    case CostFamily::linear:
      constants_ = {a, a, a, 0};
      break;
    case CostFamily::log:
      constants_ = {a * std::log(2.0), a, a / 2, 0};
      break;
    case CostFamily::truncation:
      if (a_ >= 1) {
        constants_ = {1, 1, 1, 0};
      } else {
        constants_ = {a, 1, 0, 0};
      }
      break;
    case CostFamily::trunc_log_combo:
      if (a_ >= 1) {
        constants_ = {1, 1, 1, 0};
      } else {
        constants_ = {a + std::log(2.0 - a), 1, 1 / (2.0 - a), 0};
      }
      break;
    case CostFamily::power:
      if (a_ == 1) {
        constants_ = {1, 1, 1, 0};
      } else {
        constants_ = {1, std::numeric_limits<double>::infinity(), a, 0};
      }
      break;
    case CostFamily::tabulated:
    case CostFamily::custom: {
      const ConcaveCost self = *this;
      constants_ = numeric_constants([self](double t) { return self(t); });
      break;
    }
  }
}

std::string ConcaveCost::describe() const {
  switch (family_) {
    case CostFamily::tabulated:
      return "tabulated(" + std::to_string(table_.size()) + " points)";
    case CostFamily::custom:
      return name_;
    default:
      return std::string(to_string(family_)) + "(" + to_string(a_) + ")";
  }
}

double eval(const ConcaveCost& h, const Rational& lambda) { return h.eval(lambda); }

CostConstants constants(const ConcaveCost& h) { return h.constants(); }

AssumptionReport check_assumption(const ConcaveCost& h) {
  constexpr int kGrid = 1024;
  constexpr double kTol = 1e-12;
  AssumptionReport r;
  std::vector<double> v(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) v[k] = h(static_cast<double>(k) / kGrid);

  r.h0_zero = std::abs(v[0]) <= kTol;
  if (!r.h0_zero) r.notes.push_back("h(0) = " + std::to_string(v[0]) + " is not 0");

  r.monotone = true;
  for (int k = 0; k < kGrid && r.monotone; ++k) {
    if (v[k + 1] < v[k] - kTol) {
      r.monotone = false;
      r.notes.push_back("h decreases near t = " + std::to_string(static_cast<double>(k) / kGrid));
    }
  }

  r.concave = true;
  for (int k = 1; k < kGrid && r.concave; ++k) {
    if (v[k + 1] - 2 * v[k] + v[k - 1] > kTol) {
      r.concave = false;
      r.notes.push_back("h is not concave near t = " + std::to_string(static_cast<double>(k) / kGrid));
    }
  }

  const double hp0 = h.hp0();
  r.hp0_finite_positive = std::isfinite(hp0) && hp0 > 0;
  if (!std::isfinite(hp0)) {
    r.notes.push_back("h'(0) = lim h(t)/t diverges; usable only where h'(0) is not needed");
  } else if (hp0 <= 0) {
    r.notes.push_back("h'(0) is not positive");
  }
  return r;
}

}  // namespace hypercurv
