#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace privperm {

/// Exact nonnegative integer used for every permutation count.
///
/// Only the operations that keep the value nonnegative are exposed
/// (no subtraction, no negation).
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  /// Throws std::domain_error if `v` is negative.
  explicit BigCount(boost::multiprecision::cpp_int v);

  /// Parses a nonempty run of decimal digits. Throws std::invalid_argument.
  static BigCount parse(std::string_view digits);

  std::string to_string() const { return value_.str(); }
  const boost::multiprecision::cpp_int& value() const { return value_; }

  /// Number of decimal digits.
  std::size_t digits() const { return to_string().size(); }

  BigCount& operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  BigCount& shift_left(std::uint64_t bits) {
    value_ <<= bits;
    return *this;
  }

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  /// Remainder by a machine-word divisor (divisor must be nonzero).
  std::uint64_t mod(std::uint64_t divisor) const;

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_int value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

/// n! by ascending product.
BigCount factorial(std::uint64_t n);

}  // namespace privperm
