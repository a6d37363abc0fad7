#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multiplihedra {

// All arithmetic in this library is exact. Counts use arbitrary-precision
// integers, geometry uses arbitrary-precision rationals; there is no
// floating-point fast path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Point = std::vector<Rat>;
using Weights = std::vector<long long>;

inline Weights unit_weights(int n) { return Weights(static_cast<std::size_t>(n), 1); }

// Renders "a/b" in lowest terms, or just "a" when the value is integral.
std::string format_rational(const Rat& value);

// Accepts "a" or "a/b" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

std::string format_point(const Point& p);

}  // namespace multiplihedra
