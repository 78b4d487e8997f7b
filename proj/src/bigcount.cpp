#include "streakcount/bigcount.hpp"

#include <stdexcept>

namespace streakcount {

std::string to_grouped_decimal(const BigCount& value) {
  std::string digits = BigCount(abs(value)).str();
  std::string out;
  out.reserve(digits.size() + digits.size() / 3 + 1);
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i % 3) == lead % 3) out.push_back(',');
    out.push_back(digits[i]);
  }
  return value < 0 ? "-" + out : out;
}

std::string to_fixed_point(const BigCount& numerator, const BigCount& denominator, int digits) {
  if (denominator <= 0) throw std::invalid_argument("to_fixed_point: denominator must be positive");
  if (digits < 0) throw std::invalid_argument("to_fixed_point: digits must be non-negative");

  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  BigCount scaled = BigCount(abs(numerator)) * scale;
  BigCount quotient = scaled / denominator;
  BigCount remainder = scaled % denominator;

  // half-to-even on the last kept digit
  const BigCount twice = remainder * 2;
  if (twice > denominator || (twice == denominator && (quotient & 1) != 0)) ++quotient;

  std::string body = quotient.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = numerator < 0 && quotient != 0;
  return negative ? "-" + body : body;
}

BigCount power_of_two(int n) {
  if (n < 0) throw std::invalid_argument("power_of_two: negative exponent");
  BigCount value = 1;
  value <<= n;
  return value;
}

}  // namespace streakcount
