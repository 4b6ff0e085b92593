#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace privperm {

/// The seven seating disciplines. P* rules act on a row of payphones,
/// C* rules on a circle.
enum class RuleKind { P1, P2, P3, P4, P5, C1, C2 };

enum class Layout { Row, Circle };

inline constexpr std::array<RuleKind, 7> kAllRules = {
    RuleKind::P1, RuleKind::P2, RuleKind::P3, RuleKind::P4,
    RuleKind::P5, RuleKind::C1, RuleKind::C2,
};

constexpr Layout layout_of(RuleKind rule) {
  switch (rule) {
    case RuleKind::C1:
    case RuleKind::C2:
      return Layout::Circle;
    case RuleKind::P1:
    case RuleKind::P2:
    case RuleKind::P3:
    case RuleKind::P4:
    case RuleKind::P5:
      return Layout::Row;
  }
  return Layout::Row;
}

/// Lowercase short name: "p1" ... "c2".
std::string_view rule_name(RuleKind rule);

/// OEIS A-number of the sequence counting permutations under `rule`.
std::string_view oeis_id(RuleKind rule);

/// Case-insensitive parse of "p1".."p5", "c1", "c2".
std::optional<RuleKind> parse_rule(std::string_view text);

}  // namespace privperm
