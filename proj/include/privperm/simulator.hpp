#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "privperm/big_count.hpp"
#include "privperm/rule.hpp"

namespace privperm {

/// 1-based payphone position.
using Position = std::uint32_t;
/// 1-based arrival number; 0 marks an available payphone.
using Person = std::uint32_t;

/// Occupancy of a row or circle of payphones part-way through the process.
/// Immutable: step() returns a new state.
class BoothState {
 public:
  /// Empty booth of n payphones. Throws std::domain_error for n = 0.
  BoothState(Layout layout, std::uint32_t n);

  Layout layout() const { return layout_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(occupant_.size()); }
  Person next_person() const { return next_person_; }
  std::uint32_t occupied_count() const { return next_person_ - 1; }
  bool empty() const { return next_person_ == 1; }
  bool full() const { return occupied_count() == size(); }

  /// Person at `pos`, 0 if available. Throws std::out_of_range.
  Person occupant(Position pos) const;
  bool available(Position pos) const { return occupant(pos) == 0; }

  /// Seats next_person() at `pos`. Throws std::domain_error if taken.
  BoothState step(Position pos) const;

  /// Builds a state by seating people 1, 2, ... at `positions` in order.
  static BoothState seated(Layout layout, std::uint32_t n, const std::vector<Position>& positions);

  const std::vector<Person>& occupants() const { return occupant_; }

 private:
  Layout layout_;
  std::vector<Person> occupant_;
  Person next_person_ = 1;
};

enum class Closure { Open, SemiClosed, Closed };

/// Maximal run of available payphones.
struct Interval {
  Position start;  // first position; on a circle the run may wrap past n
  std::uint32_t length;
  Closure closure;

  /// Comparison length: 2*length-1 for semi-closed, length otherwise.
  std::uint32_t full_length() const {
    return closure == Closure::SemiClosed ? 2 * length - 1 : length;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Available runs ordered by start position. A circle with a single
/// occupant yields one Closed interval of length n-1.
std::vector<Interval> intervals(const BoothState& state);

/// Positions covered by `iv` in walking order.
std::vector<Position> interval_positions(const BoothState& state, const Interval& iv);

/// Distance from available `pos` to its closest occupied payphone
/// (both arcs on a circle). Throws std::domain_error on an empty booth or
/// an occupied `pos`.
std::uint32_t nearest_distance(const BoothState& state, Position pos);

/// Number of distinct occupied payphones next to `pos`.
std::uint32_t occupied_neighbours(const BoothState& state, Position pos);

/// Positions the next person may take under `rule`, ascending.
/// Throws std::domain_error when the booth is full.
std::vector<Position> allowed_choices(const BoothState& state, RuleKind rule);

/// Position -> person assignment of a completed run.
struct PayphonePermutation {
  std::vector<Person> assignment;

  /// "3,5,1,4,6,2"
  std::string to_string() const;
  /// Inverse of to_string(). Throws std::invalid_argument.
  static PayphonePermutation parse(const std::string& text);
  bool is_bijection() const;

  friend auto operator<=>(const PayphonePermutation&, const PayphonePermutation&) = default;
};

inline constexpr std::uint32_t kDefaultEnumerationLimit = 12;

/// Every payphone permutation reachable under `rule`, duplicate-free and
/// sorted lexicographically. Throws std::domain_error for n = 0 and
/// std::length_error when n > limit.
std::vector<PayphonePermutation> enumerate(RuleKind rule, std::uint32_t n,
                                           std::uint32_t limit = kDefaultEnumerationLimit);

/// Cardinality of enumerate(rule, n, limit), counted without materializing
/// the permutations.
BigCount count_by_enumeration(RuleKind rule, std::uint32_t n,
                              std::uint32_t limit = kDefaultEnumerationLimit);

/// One run with each choice drawn uniformly from allowed_choices, using a
/// generator seeded with `seed`.
PayphonePermutation sample_run(RuleKind rule, std::uint32_t n, std::uint64_t seed);

}  // namespace privperm
