#include "privperm/counting.hpp"

#include <map>
#include <stdexcept>

#include "privperm/interval_core.hpp"

namespace privperm {
namespace {

// Sum of m[2k] over even lengths 2k >= min_even.
std::uint64_t even_mass(const LengthMultiset& m, Length min_even) {
  std::uint64_t total = 0;
  for (const auto& [length, times] : m)
    if (length % 2 == 0 && length >= min_even) total = checked_add(total, times);
  return total;
}

// Groups lengths {2k-1, 2k} under key k and sums their multiplicities.
std::map<Length, Multiplicity> paired_mass(const LengthMultiset& m) {
  std::map<Length, Multiplicity> out;
  for (const auto& [length, times] : m) {
    auto& slot = out[(length + 1) / 2];
    slot = checked_add(slot, times);
  }
  return out;
}

BigCount power_of_two(std::uint64_t e) { return BigCount(1).shift_left(e); }

using Weight = BigCount (*)(const LengthMultiset&);

// sum_{i=lo}^{hi} w(S'(i-1) + S'(n-i))
BigCount first_person_sum(Weight w, std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
  BigCount total;
  for (std::uint64_t i = lo; i <= hi; ++i)
    total += w(multiset_union(s_prime(i - 1), s_prime(n - i)));
  return total;
}

// Rules whose only change from P1/P2 is a semi-closed length-1 interval left
// by a first person at position 2 or n-1. Valid for n >= 4.
BigCount end_adjusted_sum(Weight w, std::uint64_t n, const BigCount& second_position_term) {
  BigCount total = BigCount(2) * w(s_prime(n - 1));
  total += second_position_term;
  if (n >= 5) total += first_person_sum(w, n, 3, n - 2);
  return total;
}

}  // namespace

BigCount f_weight(const LengthMultiset& m) {
  BigCount out = power_of_two(even_mass(m, 2));
  for (const auto& [length, times] : m) out *= factorial(times);
  return out;
}

BigCount g_weight(const LengthMultiset& m) {
  BigCount out = power_of_two(even_mass(m, 4));
  for (const auto& [pair, times] : paired_mass(m)) out *= factorial(times);
  return out;
}

BigCount h_weight(const LengthMultiset& m) {
  BigCount out = power_of_two(even_mass(m, 2));
  for (const auto& [pair, times] : paired_mass(m))
    if (pair >= 2) out *= factorial(times);
  out *= factorial(m.count(2));
  out *= factorial(m.count(1));
  return out;
}

BigCount count_rule(RuleKind rule, std::uint64_t n) {
  if (n == 0) throw std::domain_error("count_rule: n must be >= 1");

  const bool small = n <= 3;
  static const BigCount kSmall[] = {0, 1, 2, 4};

  switch (rule) {
    case RuleKind::C2:
      return BigCount(n) * f_weight(s_multiset(n - 1));
    case RuleKind::C1:
      return BigCount(n) * g_weight(s_multiset(n - 1));
    case RuleKind::P2:
      return first_person_sum(f_weight, n, 1, n);
    case RuleKind::P1:
      return first_person_sum(g_weight, n, 1, n);
    case RuleKind::P3:
      if (small) return kSmall[n];
      return end_adjusted_sum(g_weight, n, BigCount(2) * g_weight(s_prime(n - 2)));
    case RuleKind::P4:
      if (small) return kSmall[n];
      return end_adjusted_sum(f_weight, n, BigCount(2) * f_weight(s_prime(n - 2)));
    case RuleKind::P5: {
      if (small) return kSmall[n];
      LengthMultiset with_two = s_prime(n - 2);
      with_two.add(2);
      return end_adjusted_sum(h_weight, n, h_weight(with_two));
    }
  }
  throw std::logic_error("count_rule: unhandled rule");
}

std::uint64_t a060973(std::uint64_t n) {
  if (n == 0) throw std::domain_error("a060973: n must be >= 1");
  if (n == 1) return 0;
  return multiplicity_explicit(n - 1, 1);
}

}  // namespace privperm
