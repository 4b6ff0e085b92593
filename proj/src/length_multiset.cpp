#include "privperm/length_multiset.hpp"

#include <sstream>
#include <stdexcept>

namespace privperm {

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("multiset multiplicity overflows 64 bits");
  return out;
}

LengthMultiset::LengthMultiset(std::initializer_list<std::pair<const Length, Multiplicity>> init) {
  for (const auto& [length, times] : init) add(length, times);
}

void LengthMultiset::add(Length length, Multiplicity times) {
  if (length == 0) throw std::invalid_argument("interval lengths must be >= 1");
  if (times == 0) return;
  auto [it, inserted] = entries_.try_emplace(length, times);
  if (!inserted) it->second = checked_add(it->second, times);
}

void LengthMultiset::merge(const LengthMultiset& other) {
  for (const auto& [length, times] : other.entries_) add(length, times);
}

Multiplicity LengthMultiset::count(Length k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0 : it->second;
}

Multiplicity LengthMultiset::size() const {
  Multiplicity total = 0;
  for (const auto& [length, times] : entries_) total = checked_add(total, times);
  return total;
}

std::string LengthMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [length, times] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << length;
    if (times != 1) os << '^' << times;
  }
  os << '}';
  return os.str();
}

LengthMultiset multiset_union(const LengthMultiset& a, const LengthMultiset& b) {
  LengthMultiset out = a;
  out.merge(b);
  return out;
}

}  // namespace privperm
