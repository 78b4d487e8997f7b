#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace streakcount {

/// Exact signed integer used for every count in the library. Counts are
/// non-negative by construction; differences such as the win gap may not be.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Decimal with ',' every three digits, for human-readable tables only.
std::string to_grouped_decimal(const BigCount& value);

/// numerator / denominator written to `digits` places after the point,
/// rounded half-to-even on the last digit. Pure integer arithmetic.
/// Throws std::invalid_argument if denominator <= 0.
std::string to_fixed_point(const BigCount& numerator, const BigCount& denominator, int digits);

/// 2^n as an exact integer.
BigCount power_of_two(int n);

}  // namespace streakcount
