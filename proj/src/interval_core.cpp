#include "privperm/interval_core.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace privperm {
namespace {

class SCache {
 public:
  const LengthMultiset* find(std::uint64_t n) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(n);
    return it == table_.end() ? nullptr : &it->second;
  }

  // First writer wins; later writers computed an equal value.
  const LengthMultiset& insert(std::uint64_t n, LengthMultiset value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(n, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  // unordered_map never relocates its nodes, so handed-out references stay valid.
  std::unordered_map<std::uint64_t, LengthMultiset> table_;
};

SCache& cache() {
  static SCache instance;
  return instance;
}

const LengthMultiset& s_multiset_ref(std::uint64_t n) {
  static const LengthMultiset kEmpty;
  if (n == 0) return kEmpty;
  if (const auto* hit = cache().find(n)) return *hit;

  LengthMultiset out;
  out.add(n);
  const std::uint64_t lo = (n - 1) / 2;
  const std::uint64_t hi = n / 2;  // ceil((n-1)/2)
  out.merge(s_multiset_ref(lo));
  out.merge(s_multiset_ref(hi));
  return cache().insert(n, std::move(out));
}

void require_positive(std::uint64_t n, std::uint64_t k, const char* who) {
  if (n == 0 || k == 0)
    throw std::domain_error(std::string(who) + ": n and k must be >= 1");
}

}  // namespace

LengthMultiset s_multiset(std::uint64_t n) { return s_multiset_ref(n); }

LengthMultiset s_prime(std::uint64_t l) {
  if (l == 0) return {};
  if (l > (std::uint64_t{1} << 62)) throw std::overflow_error("s_prime: 2l-1 overflows");
  LengthMultiset out = s_multiset_ref(l - 1);
  out.add(2 * l - 1);
  return out;
}

std::uint64_t multiplicity_lemma(std::uint64_t n, std::uint64_t k) {
  require_positive(n, k, "multiplicity_lemma");
  using wide = unsigned __int128;
  const wide big_n = n;
  const wide big_k = k;
  std::uint64_t total = 0;
  // Upper bound: k * 2^l <= n. Lower bound: (k+2) * 2^l >= n+2.
  for (unsigned l = 0; l < 64 && (big_k << l) <= big_n; ++l) {
    const wide pow = wide{1} << l;
    if ((big_k + 2) * pow < big_n + 2) continue;
    const wide lhs = big_n + 1;
    const wide rhs = (big_k + 1) * pow;
    const wide gap = lhs > rhs ? lhs - rhs : rhs - lhs;
    // In range, n - k 2^l lies in [0, 2^(l+1) - 2], so gap < 2^l.
    total = checked_add(total, static_cast<std::uint64_t>(pow - gap));
  }
  return total;
}

std::uint64_t multiplicity_explicit(std::uint64_t n, std::uint64_t k) {
  require_positive(n, k, "multiplicity_explicit");
  const unsigned top = floor_log2(n);

  if (k == 1) {
    // n >= 3 * 2^(top-1) - 1  <=>  2n + 2 >= 3 * 2^top
    const unsigned __int128 lhs = static_cast<unsigned __int128>(n) * 2 + 2;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(3) << top;
    if (lhs >= rhs) return 1 + (n & ((std::uint64_t{1} << top) - 1));
    return std::uint64_t{1} << (top - 1);
  }

  std::uint64_t value = 0;
  int matches = 0;
  for (unsigned l = 0; l + 1 <= top; ++l) {
    if (k == (n >> l)) {
      value = 1 + (n & ((std::uint64_t{1} << l) - 1));
      ++matches;
    }
  }
  // l ranges over 0 .. floor(log2(n/3)), i.e. 3 * 2^l <= n.
  for (unsigned l = 0; l < 62 && (std::uint64_t{3} << l) <= n; ++l) {
    if (k + 1 == (n >> l)) {
      value = (std::uint64_t{1} << l) - 1 - (n & ((std::uint64_t{1} << l) - 1));
      ++matches;
    }
  }
  if (matches > 1)
    throw std::logic_error("multiplicity_explicit: more than one branch matched for n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  return value;
}

namespace detail {
std::size_t s_cache_size() { return cache().size(); }
}  // namespace detail

}  // namespace privperm
