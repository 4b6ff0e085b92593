#include "privperm/rule.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace privperm {

std::string_view rule_name(RuleKind rule) {
  switch (rule) {
    case RuleKind::P1: return "p1";
    case RuleKind::P2: return "p2";
    case RuleKind::P3: return "p3";
    case RuleKind::P4: return "p4";
    case RuleKind::P5: return "p5";
    case RuleKind::C1: return "c1";
    case RuleKind::C2: return "c2";
  }
  return "?";
}

std::string_view oeis_id(RuleKind rule) {
  switch (rule) {
    case RuleKind::P1: return "A358056";
    case RuleKind::P2: return "A095236";
    case RuleKind::P3: return "A361295";
    case RuleKind::P4: return "A095912";
    case RuleKind::P5: return "A363785";
    case RuleKind::C1: return "A361296";
    case RuleKind::C2: return "A095239";
  }
  return "";
}

std::optional<RuleKind> parse_rule(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (RuleKind rule : kAllRules)
    if (rule_name(rule) == lower) return rule;
  return std::nullopt;
}

}  // namespace privperm
