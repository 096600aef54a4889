#include "hypercurv/rational.hpp"

#include "hypercurv/error.hpp"

#include <cctype>

namespace hypercurv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LoopFound: return "LoopFound";
    case ErrorCode::DuplicateHyperedge: return "DuplicateHyperedge";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SupportOutsideVertexSet: return "SupportOutsideVertexSet";
    case ErrorCode::SupportOutsideEdge: return "SupportOutsideEdge";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::InvalidCost: return "InvalidCost";
    case ErrorCode::InfiniteDerivativeAtZero: return "InfiniteDerivativeAtZero";
    case ErrorCode::StepLeavesHyperedge: return "StepLeavesHyperedge";
    case ErrorCode::NegativeIntermediateMass: return "NegativeIntermediateMass";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::NotAssociated: return "NotAssociated";
    case ErrorCode::InfeasibleQuantization: return "InfeasibleQuantization";
    case ErrorCode::StateBudgetExceeded: return "StateBudgetExceeded";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::OutOfCatalogRange: return "OutOfCatalogRange";
    case ErrorCode::PairTooClose: return "PairTooClose";
    case ErrorCode::NonpositiveKappa: return "NonpositiveKappa";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "cannot parse rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d{std::string(den)};
    if (d == 0) bad(text);
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) bad(text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = BigInt(std::string(whole)) * scale;
    if (!frac.empty()) num += BigInt(std::string(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  return boost::multiprecision::abs(a / g * b);
}

}  // namespace hypercurv
