#pragma once

#include <cstdint>

#include "privperm/length_multiset.hpp"

namespace privperm {

/// Multiset S(n) of lengths of all nonempty intervals that appear while a
/// closed interval of length n fills up under max-distance seating:
///   S(0) = {},  S(n) = {n} + S(floor((n-1)/2)) + S(ceil((n-1)/2)).
///
/// Memoized in a process-wide cache that is safe for concurrent callers.
LengthMultiset s_multiset(std::uint64_t n);

/// Contribution of a semi-closed interval of length l:
/// {} for l = 0, otherwise S(l-1) + {2l-1}.
LengthMultiset s_prime(std::uint64_t l);

/// #_k S(n) as the closed-form sum over l of 2^l - |n+1 - (k+1) 2^l|,
/// with l ranging over ceil(log2((n+2)/(k+2))) .. floor(log2(n/k)).
/// Bounds are found with integer comparisons only. Requires n, k >= 1
/// (std::domain_error otherwise).
std::uint64_t multiplicity_lemma(std::uint64_t n, std::uint64_t k);

/// #_k S(n) by the piecewise explicit formula (two floor identities for
/// k >= 2, a dedicated rule for k = 1). Requires n, k >= 1.
///
/// Throws std::logic_error if both k >= 2 branches ever match, which the
/// underlying math rules out.
std::uint64_t multiplicity_explicit(std::uint64_t n, std::uint64_t k);

/// floor(log2(x)) for x >= 1.
inline unsigned floor_log2(std::uint64_t x) {
  return 63u - static_cast<unsigned>(__builtin_clzll(x));
}

namespace detail {
/// Entries currently held by the S(n) memo (for tests).
std::size_t s_cache_size();
}  // namespace detail

}  // namespace privperm
