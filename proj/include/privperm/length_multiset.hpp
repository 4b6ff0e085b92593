#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace privperm {

using Length = std::uint64_t;
using Multiplicity = std::uint64_t;

/// Sparse multiset of interval lengths.
///
/// Keys are lengths >= 1; a key is stored only while its multiplicity is
/// positive. Multiplicities are 64-bit and every addition is overflow
/// checked (std::overflow_error).
class LengthMultiset {
 public:
  using Entries = std::map<Length, Multiplicity>;

  LengthMultiset() = default;
  /// {{1, 2}, {3, 1}} is {1^2, 3}. Zero multiplicities are dropped.
  LengthMultiset(std::initializer_list<std::pair<const Length, Multiplicity>> init);

  /// Adds `times` copies of `length`. Throws std::invalid_argument for length 0.
  void add(Length length, Multiplicity times = 1);
  void merge(const LengthMultiset& other);

  /// #_k of this multiset.
  Multiplicity count(Length k) const;
  /// Sum of all multiplicities.
  Multiplicity size() const;
  bool empty() const { return entries_.empty(); }
  std::size_t distinct() const { return entries_.size(); }

  const Entries& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// "{1^2, 2, 4}" (exponent omitted for multiplicity one).
  std::string to_string() const;

  friend bool operator==(const LengthMultiset&, const LengthMultiset&) = default;

 private:
  Entries entries_;
};

/// Multiset union (multiplicities add).
LengthMultiset multiset_union(const LengthMultiset& a, const LengthMultiset& b);

/// a + b on 64-bit counters; throws std::overflow_error on wrap.
Multiplicity checked_add(Multiplicity a, Multiplicity b);

}  // namespace privperm
