#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hypercurv {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", "p" and finite decimals such as "0.9" (read exactly as 9/10).
Rational parse_rational(std::string_view text);

// Lowest terms, "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace hypercurv
