#include "privperm/big_count.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace privperm {

BigCount::BigCount(boost::multiprecision::cpp_int v) : value_(std::move(v)) {
  if (value_.sign() < 0) throw std::domain_error("BigCount cannot be negative");
}

BigCount BigCount::parse(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  BigCount out;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("not a nonnegative integer: '" + std::string(digits) + "'");
    out.value_ *= 10;
    out.value_ += static_cast<unsigned>(ch - '0');
  }
  return out;
}

std::uint64_t BigCount::mod(std::uint64_t divisor) const {
  if (divisor == 0) throw std::domain_error("BigCount::mod by zero");
  boost::multiprecision::cpp_int r = value_ % divisor;
  return r.convert_to<std::uint64_t>();
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

BigCount factorial(std::uint64_t n) {
  boost::multiprecision::cpp_int acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return BigCount(std::move(acc));
}

}  // namespace privperm
