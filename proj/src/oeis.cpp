#include "privperm/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "httplib.h"

namespace privperm {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t parse_index(std::string_view field, std::size_t line_no) {
  std::string_view digits = field;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (!all_digits(digits) || digits.size() > 18)
    throw FormatError(line_no, "bad index '" + std::string(field) + "'");
  std::int64_t value = std::stoll(std::string(digits));
  return negative ? -value : value;
}

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool valid_oeis_id(std::string_view id) {
  return id.size() == 7 && id.front() == 'A' && all_digits(id.substr(1));
}

SequenceTerms parse_bfile(std::string_view text, std::string oeis_id) {
  if (!oeis_id.empty() && !valid_oeis_id(oeis_id))
    throw std::invalid_argument("not an OEIS id: '" + oeis_id + "'");

  SequenceTerms out;
  out.oeis_id = std::move(oeis_id);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = rstrip(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;

    if (line.empty() || line.front() == '#') continue;

    const std::size_t sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos || sep == 0)
      throw FormatError(line_no, "expected '<index> <value>'");
    const std::int64_t index = parse_index(line.substr(0, sep), line_no);
    std::string_view value = line.substr(sep + 1);
    if (!all_digits(value))
      throw FormatError(line_no, "bad value '" + std::string(value) + "'");

    if (out.values.empty()) {
      out.offset = index;
    } else if (index != out.last_index() + 1) {
      throw FormatError(line_no, "index " + std::to_string(index) + " does not follow " +
                                     std::to_string(out.last_index()));
    }
    out.values.push_back(BigCount::parse(value));
  }
  if (out.values.empty()) throw FormatError(0, "b-file contains no terms");
  return out;
}

std::string emit_bfile(const SequenceTerms& terms) {
  if (terms.values.empty()) throw FormatError(0, "cannot emit a b-file without terms");
  std::string out;
  std::int64_t index = terms.offset;
  for (const auto& v : terms.values) {
    out += std::to_string(index++);
    out += ' ';
    out += v.to_string();
    out += '\n';
  }
  return out;
}

std::string ComparisonReport::summary() const {
  std::ostringstream os;
  const std::string range = "indices " + std::to_string(first_index) + ".." + std::to_string(last_index);
  if (all_match()) {
    os << "all " << compared << " match (" << range << ")";
  } else {
    os << "mismatch at index " << first_mismatch->index << ": computed "
       << first_mismatch->computed << ", reference " << first_mismatch->reference << " ("
       << matched << " of " << compared << " match, " << range << ")";
  }
  return os.str();
}

ComparisonReport compare_terms(const SequenceTerms& computed, const SequenceTerms& reference) {
  if (computed.values.empty() || reference.values.empty())
    throw std::domain_error("compare_terms: empty sequence");
  const std::int64_t lo = std::max(computed.first_index(), reference.first_index());
  const std::int64_t hi = std::min(computed.last_index(), reference.last_index());
  if (lo > hi)
    throw std::domain_error("compare_terms: index ranges " + std::to_string(computed.first_index()) +
                            ".." + std::to_string(computed.last_index()) + " and " +
                            std::to_string(reference.first_index()) + ".." +
                            std::to_string(reference.last_index()) + " do not overlap");

  ComparisonReport report;
  report.first_index = lo;
  report.last_index = hi;
  for (std::int64_t i = lo; i <= hi; ++i) {
    ++report.compared;
    const auto& a = computed.at_index(i);
    const auto& b = reference.at_index(i);
    if (a == b) {
      ++report.matched;
    } else if (!report.first_mismatch) {
      report.first_mismatch = Mismatch{i, a, b};
    }
  }
  return report;
}

std::string bfile_url(std::string_view oeis_id, std::string_view base_url) {
  if (!valid_oeis_id(oeis_id)) throw std::invalid_argument("not an OEIS id: '" + std::string(oeis_id) + "'");
  while (!base_url.empty() && base_url.back() == '/') base_url.remove_suffix(1);
  return std::string(base_url) + "/" + std::string(oeis_id) + "/b" + std::string(oeis_id.substr(1)) + ".txt";
}

std::string base_url_from_env() {
  const char* env = std::getenv(kBaseUrlEnvVar);
  return env && *env ? std::string(env) : std::string(kDefaultOeisBaseUrl);
}

std::string fetch_bfile(std::string_view oeis_id, const FetchOptions& options) {
  const std::string url = bfile_url(oeis_id, options.base_url);
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw std::invalid_argument("base URL needs a scheme: '" + options.base_url + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = url.substr(path_start);

  httplib::Client client(origin);
  if (!client.is_valid()) throw std::invalid_argument("unsupported base URL: '" + options.base_url + "'");
  client.set_connection_timeout(options.timeout_seconds, 0);
  client.set_read_timeout(options.timeout_seconds, 0);
  client.set_follow_location(true);

  std::string last_error;
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    auto res = client.Get(path);
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 404) throw FetchError(404, "not found: " + url);
    if (res->status != 200)
      throw FetchError(res->status, "GET " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
  }
  throw FetchError(0, "GET " + url + " failed: " + last_error);
}

}  // namespace privperm
