#include "privperm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "privperm/counting.hpp"
#include "privperm/interval_core.hpp"
#include "privperm/oeis.hpp"
#include "privperm/simulator.hpp"

namespace privperm::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RuleKind rule_arg(const std::string& text) {
  if (auto rule = parse_rule(text)) return *rule;
  throw UsageError("unknown rule '" + text + "' (expected one of p1..p5, c1, c2)");
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

SequenceTerms compute_terms(RuleKind rule, std::uint64_t from, std::uint64_t to, const CountFn& formula) {
  SequenceTerms terms{std::string(oeis_id(rule)), static_cast<std::int64_t>(from), {}};
  terms.values.reserve(to - from + 1);
  for (std::uint64_t n = from; n <= to; ++n) terms.values.push_back(formula(rule, n));
  return terms;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- subcommands ---------------------------------------------------------

struct TermsArgs {
  std::string rule;
  std::uint64_t from = 1;
  std::uint64_t to = 10;
  std::string format = "table";
  std::string delimiter = " ";
};

int cmd_terms(const TermsArgs& a, std::ostream& out, const CountFn& formula) {
  const RuleKind rule = rule_arg(a.rule);
  if (a.from < 1 || a.to < a.from)
    throw UsageError("invalid range " + std::to_string(a.from) + ".." + std::to_string(a.to) +
                     " (need 1 <= from <= to)");
  const SequenceTerms terms = compute_terms(rule, a.from, a.to, formula);

  if (a.format == "bfile") {
    out << emit_bfile(terms);
  } else if (a.format == "delimited") {
    for (std::size_t i = 0; i < terms.values.size(); ++i) out << (i ? a.delimiter : "") << terms.values[i];
    out << '\n';
  } else {
    const int width = static_cast<int>(std::to_string(a.to).size());
    out << std::setw(width) << "n" << "  " << upper(rule_name(rule)) << "(n)  [" << oeis_id(rule) << "]\n";
    for (std::uint64_t n = a.from; n <= a.to; ++n)
      out << std::setw(width) << n << "  " << terms.at_index(static_cast<std::int64_t>(n)) << '\n';
  }
  return kOk;
}

struct EnumerateArgs {
  std::string rule;
  std::uint32_t n = 0;
  std::uint32_t limit = kDefaultEnumerationLimit;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const RuleKind rule = rule_arg(a.rule);
  std::vector<PayphonePermutation> perms;
  try {
    perms = enumerate(rule, a.n, a.limit);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  for (const auto& p : perms) out << p.to_string() << '\n';
  out << "total: " << perms.size() << '\n';
  return kOk;
}

struct CrosscheckArgs {
  std::uint32_t max_n = 8;
  std::uint32_t limit = kDefaultEnumerationLimit;
};

int cmd_crosscheck(const CrosscheckArgs& a, std::ostream& out, std::ostream& err, const CountFn& formula) {
  if (a.max_n < 1) throw UsageError("--max-n must be >= 1");
  if (a.max_n > a.limit)
    throw UsageError("--max-n " + std::to_string(a.max_n) + " exceeds the enumeration limit " +
                     std::to_string(a.limit));
  const auto result = crosscheck(a.max_n, formula, a.limit);
  for (const auto& row : result.rows)
    out << rule_name(row.rule) << ' ' << row.n << " formula=" << row.formula << " oracle=" << row.oracle
        << (row.ok() ? " ok" : " MISMATCH") << '\n';
  if (result.first_failure) {
    const auto& f = *result.first_failure;
    err << "crosscheck failed: rule " << rule_name(f.rule) << ", n=" << f.n << ": formula " << f.formula
        << " != oracle " << f.oracle << '\n';
    return kCheckFailed;
  }
  out << "crosscheck passed: " << result.rows.size() << " (rule, n) pairs\n";
  return kOk;
}

struct VerifyArgs {
  std::string rule;
  std::string bfile;
  bool fetch = false;
  std::optional<std::uint64_t> max_n;
  std::string base_url;
  std::string cache_dir;
  int retries = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err, const CountFn& formula) {
  const RuleKind rule = rule_arg(a.rule);
  if (a.bfile.empty() == !a.fetch) throw UsageError("verify needs exactly one of --bfile or --fetch");
  const std::string id(oeis_id(rule));

  std::string text;
  try {
    if (!a.bfile.empty()) {
      text = read_file(a.bfile);
    } else {
      std::filesystem::path cached;
      if (!a.cache_dir.empty()) cached = std::filesystem::path(a.cache_dir) / ("b" + id.substr(1) + ".txt");
      if (!cached.empty() && std::filesystem::exists(cached)) {
        text = read_file(cached);
      } else {
        FetchOptions opts;
        opts.base_url = a.base_url.empty() ? base_url_from_env() : a.base_url;
        opts.retries = a.retries;
        text = fetch_bfile(id, opts);
        if (!cached.empty()) {
          std::filesystem::create_directories(cached.parent_path());
          std::ofstream(cached, std::ios::binary) << text;
        }
      }
    }
  } catch (const std::exception& e) {
    err << "verify " << rule_name(rule) << ": " << e.what() << '\n';
    return kCheckFailed;
  }

  SequenceTerms reference;
  try {
    reference = parse_bfile(text, id);
  } catch (const FormatError& e) {
    err << "verify " << rule_name(rule) << ": malformed b-file: " << e.what() << '\n';
    return kCheckFailed;
  }

  const std::int64_t from = std::max<std::int64_t>(1, reference.first_index());
  const std::int64_t to = a.max_n ? static_cast<std::int64_t>(*a.max_n) : reference.last_index();
  if (to < from) {
    err << "verify " << rule_name(rule) << ": no overlap between computed 1.." << to << " and reference "
        << reference.first_index() << ".." << reference.last_index() << '\n';
    return kCheckFailed;
  }
  const SequenceTerms computed = compute_terms(rule, static_cast<std::uint64_t>(from),
                                               static_cast<std::uint64_t>(to), formula);
  ComparisonReport report;
  try {
    report = compare_terms(computed, reference);
  } catch (const std::domain_error& e) {
    err << "verify " << rule_name(rule) << ": " << e.what() << '\n';
    return kCheckFailed;
  }
  (report.all_match() ? out : err) << rule_name(rule) << " vs " << id << ": " << report.summary() << '\n';
  return report.all_match() ? kOk : kCheckFailed;
}

struct MultiplicityArgs {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
};

int cmd_multiplicity(const MultiplicityArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("n must be >= 1");
  if (a.k) {
    if (*a.k < 1) throw UsageError("--k must be >= 1");
    out << multiplicity_explicit(a.n, *a.k) << '\n';
    return kOk;
  }
  bool first = true;
  for (const auto& [k, times] : s_multiset(a.n)) {
    out << (first ? "" : " ") << k << ':' << times;
    first = false;
  }
  out << '\n';
  return kOk;
}

struct SampleArgs {
  std::string rule;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  const RuleKind rule = rule_arg(a.rule);
  if (a.n < 1) throw UsageError("n must be >= 1");
  out << sample_run(rule, a.n, a.seed).to_string() << '\n';
  return kOk;
}

}  // namespace

CrosscheckResult crosscheck(std::uint32_t max_n, const CountFn& formula, std::uint32_t limit) {
  CrosscheckResult result;
  for (RuleKind rule : kAllRules) {
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      CrosscheckRow row{rule, n, formula(rule, n), count_by_enumeration(rule, n, limit)};
      if (!row.ok() && !result.first_failure) result.first_failure = row;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CountFn& formula_in) {
  const CountFn formula = formula_in ? formula_in : CountFn(count_rule);

  CLI::App app{"Exact counts and exhaustive enumeration of payphone permutations", "privperm"};
  app.require_subcommand(1);

  TermsArgs terms;
  auto* terms_cmd = app.add_subcommand("terms", "Print counts for n in [from, to]");
  terms_cmd->add_option("rule", terms.rule, "p1..p5, c1, c2")->required();
  terms_cmd->add_option("from", terms.from, "First n (>= 1)")->required();
  terms_cmd->add_option("to", terms.to, "Last n")->required();
  terms_cmd->add_option("--format", terms.format, "table | bfile | delimited")
      ->check(CLI::IsMember({"table", "bfile", "delimited"}));
  terms_cmd->add_option("--delimiter", terms.delimiter, "Separator for --format delimited");

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "List every permutation reachable under a rule");
  en_cmd->add_option("rule", en.rule, "p1..p5, c1, c2")->required();
  en_cmd->add_option("n", en.n, "Number of payphones")->required();
  en_cmd->add_option("--limit", en.limit, "Largest n accepted for exhaustive search");

  CrosscheckArgs cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Compare formulas with exhaustive enumeration");
  cc_cmd->add_option("--max-n", cc.max_n, "Check 1 <= n <= max-n for every rule");
  cc_cmd->add_option("--limit", cc.limit, "Largest n accepted for exhaustive search");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Compare computed terms with an OEIS b-file");
  ver_cmd->add_option("rule", ver.rule, "p1..p5, c1, c2")->required();
  auto* bfile_opt = ver_cmd->add_option("--bfile", ver.bfile, "Local b-file");
  auto* fetch_opt = ver_cmd->add_flag("--fetch", ver.fetch, "Download the b-file over HTTP");
  bfile_opt->excludes(fetch_opt);
  ver_cmd->add_option("--max-n", ver.max_n, "Compute terms up to this n (default: end of b-file)");
  ver_cmd->add_option("--base-url", ver.base_url,
                      std::string("OEIS base URL (default: $") + kBaseUrlEnvVar + " or https://oeis.org)");
  ver_cmd->add_option("--cache-dir", ver.cache_dir, "Reuse/store fetched b-files in this directory");
  ver_cmd->add_option("--retries", ver.retries, "Extra attempts after a transport failure");

  MultiplicityArgs mul;
  auto* mul_cmd = app.add_subcommand("multiplicity", "Multiplicities #k S(n) of interval lengths");
  mul_cmd->add_option("n", mul.n, "Interval length n (>= 1)")->required();
  mul_cmd->add_option("--k", mul.k, "Print only #k S(n)");

  SampleArgs smp;
  auto* smp_cmd = app.add_subcommand("sample", "One random run, reproducible by seed");
  smp_cmd->add_option("rule", smp.rule, "p1..p5, c1, c2")->required();
  smp_cmd->add_option("n", smp.n, "Number of payphones")->required();
  smp_cmd->add_option("--seed", smp.seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*terms_cmd) return cmd_terms(terms, out, formula);
    if (*en_cmd) return cmd_enumerate(en, out);
    if (*cc_cmd) return cmd_crosscheck(cc, out, err, formula);
    if (*ver_cmd) return cmd_verify(ver, out, err, formula);
    if (*mul_cmd) return cmd_multiplicity(mul, out);
    if (*smp_cmd) return cmd_sample(smp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace privperm::cli
