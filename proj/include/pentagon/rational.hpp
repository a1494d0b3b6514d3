#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pentagon {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serialized form used by every file format: "num/den", or "num" when the
// denominator is 1. No decimal output on any verification path.
std::string format_rat(const Rat& r);

// Strict parser for the form above. Accepts an optional leading '-',
// rejects empty parts, a zero denominator and any stray character.
Rat parse_rat(std::string_view text);

// Decimal annotation for human-readable reports only.
std::string approx_rat(const Rat& r);

Int binomial(int n, int k);

// n * (n-1) * ... * (n-k+1)
Int falling_factorial(int n, int k);

}  // namespace pentagon
