#pragma once

#include <cstdint>

#include "privperm/big_count.hpp"
#include "privperm/length_multiset.hpp"
#include "privperm/rule.hpp"

namespace privperm {

// Weight functions turning an interval-evolution multiset into a number of
// admissible arrival orders. #_k M is written m[k] below.

/// F(M) = prod_k m[k]! * 2^(sum_k m[2k]).
BigCount f_weight(const LengthMultiset& m);

/// G(M) = prod_{k>=1} (m[2k] + m[2k-1])! * 2^(sum_{k>=2} m[2k]).
BigCount g_weight(const LengthMultiset& m);

/// H(M) = prod_{k>=2} (m[2k] + m[2k-1])! * m[2]! * m[1]! * 2^(sum_{k>=1} m[2k]).
BigCount h_weight(const LengthMultiset& m);

/// Number of payphone permutations of size n under `rule`.
/// Throws std::domain_error for n = 0.
BigCount count_rule(RuleKind rule, std::uint64_t n);

/// OEIS A060973: f(n) = #_1 S(n-1), so f(1) = 0, f(2) = 1 and
/// f(n) = f(floor(n/2)) + f(ceil(n/2)). Throws std::domain_error for n = 0.
std::uint64_t a060973(std::uint64_t n);

}  // namespace privperm
