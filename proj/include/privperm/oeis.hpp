#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "privperm/big_count.hpp"

namespace privperm {

/// Consecutive terms of an integer sequence, starting at `offset`.
struct SequenceTerms {
  std::string oeis_id;  // "A" + 6 digits, or empty when unknown
  std::int64_t offset = 1;
  std::vector<BigCount> values;

  std::int64_t first_index() const { return offset; }
  std::int64_t last_index() const { return offset + static_cast<std::int64_t>(values.size()) - 1; }
  const BigCount& at_index(std::int64_t index) const { return values.at(static_cast<std::size_t>(index - offset)); }

  friend bool operator==(const SequenceTerms&, const SequenceTerms&) = default;
};

/// Malformed b-file content. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Network or HTTP failure. `status()` is the HTTP status, 0 when no
/// response arrived.
class FetchError : public std::runtime_error {
 public:
  FetchError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const { return status_; }
  bool not_found() const { return status_ == 404; }

 private:
  int status_;
};

/// True for "A" followed by exactly six digits.
bool valid_oeis_id(std::string_view id);

/// Parses "<index> <value>" lines. Blank lines and lines starting with '#'
/// are skipped; trailing whitespace and CRLF endings are tolerated. Indices
/// must be consecutive and at least one term must be present.
SequenceTerms parse_bfile(std::string_view text, std::string oeis_id = {});

/// Canonical "index value\n" lines. Throws FormatError for empty terms.
std::string emit_bfile(const SequenceTerms& terms);

struct Mismatch {
  std::int64_t index;
  BigCount computed;
  BigCount reference;
};

struct ComparisonReport {
  std::int64_t first_index;  // overlapping range
  std::int64_t last_index;
  std::size_t compared = 0;
  std::size_t matched = 0;
  std::optional<Mismatch> first_mismatch;

  bool all_match() const { return matched == compared; }
  /// "all 10 match (indices 1..10)" or a description of the first mismatch.
  std::string summary() const;
};

/// Compares the overlapping index range. Throws std::domain_error when the
/// ranges are disjoint.
ComparisonReport compare_terms(const SequenceTerms& computed, const SequenceTerms& reference);

inline constexpr std::string_view kDefaultOeisBaseUrl = "https://oeis.org";
inline constexpr const char* kBaseUrlEnvVar = "PRIVPERM_OEIS_BASE_URL";

/// {base_url}/{id}/b{digits}.txt
std::string bfile_url(std::string_view oeis_id, std::string_view base_url = kDefaultOeisBaseUrl);

/// Base URL from PRIVPERM_OEIS_BASE_URL, falling back to the default.
std::string base_url_from_env();

struct FetchOptions {
  std::string base_url{kDefaultOeisBaseUrl};
  int retries = 0;  // extra attempts after a transport failure
  int timeout_seconds = 20;
};

/// HTTP GET of the b-file for `oeis_id`; returns the raw body.
/// Throws FetchError (404 -> not_found()) or std::invalid_argument for a
/// malformed id or base URL.
std::string fetch_bfile(std::string_view oeis_id, const FetchOptions& options = {});

}  // namespace privperm
