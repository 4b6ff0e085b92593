#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "privperm/big_count.hpp"
#include "privperm/rule.hpp"

namespace privperm::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

using CountFn = std::function<BigCount(RuleKind, std::uint64_t)>;

struct CrosscheckRow {
  RuleKind rule;
  std::uint32_t n;
  BigCount formula;
  BigCount oracle;
  bool ok() const { return formula == oracle; }
};

struct CrosscheckResult {
  std::vector<CrosscheckRow> rows;  // rule-major, n ascending
  std::optional<CrosscheckRow> first_failure;
};

/// Formula vs exhaustive enumeration for every rule and 1 <= n <= max_n.
CrosscheckResult crosscheck(std::uint32_t max_n, const CountFn& formula, std::uint32_t limit);

/// Entry point behind the `privperm` executable. `args` excludes the program
/// name. `formula` replaces count_rule when set (used to exercise failure
/// paths).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const CountFn& formula = {});

}  // namespace privperm::cli
