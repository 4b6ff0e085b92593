#include "privperm/simulator.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace privperm {

BoothState::BoothState(Layout layout, std::uint32_t n) : layout_(layout), occupant_(n, 0) {
  if (n == 0) throw std::domain_error("BoothState: need at least one payphone");
}

Person BoothState::occupant(Position pos) const {
  if (pos < 1 || pos > size())
    throw std::out_of_range("payphone " + std::to_string(pos) + " outside 1.." +
                            std::to_string(size()));
  return occupant_[pos - 1];
}

BoothState BoothState::step(Position pos) const {
  if (!available(pos))
    throw std::domain_error("payphone " + std::to_string(pos) + " is already occupied");
  BoothState next = *this;
  next.occupant_[pos - 1] = next.next_person_++;
  return next;
}

BoothState BoothState::seated(Layout layout, std::uint32_t n, const std::vector<Position>& positions) {
  BoothState state(layout, n);
  for (Position pos : positions) state = state.step(pos);
  return state;
}

std::vector<Interval> intervals(const BoothState& state) {
  const std::uint32_t n = state.size();
  std::vector<Interval> out;
  if (state.empty()) {
    out.push_back({1, n, Closure::Open});
    return out;
  }

  if (state.layout() == Layout::Row) {
    Position p = 1;
    while (p <= n) {
      if (!state.available(p)) {
        ++p;
        continue;
      }
      const Position a = p;
      while (p <= n && state.available(p)) ++p;
      const Position b = p - 1;
      const int flanks = (a > 1 ? 1 : 0) + (b < n ? 1 : 0);
      out.push_back({a, b - a + 1, flanks == 2 ? Closure::Closed : Closure::SemiClosed});
    }
    return out;
  }

  // Circle: walk once around starting just after some occupied payphone.
  Position anchor = 1;
  while (state.available(anchor)) ++anchor;
  std::uint32_t offset = 1;
  while (offset < n) {
    const Position p = (anchor - 1 + offset) % n + 1;
    if (!state.available(p)) {
      ++offset;
      continue;
    }
    std::uint32_t length = 0;
    while (offset < n && state.available((anchor - 1 + offset) % n + 1)) {
      ++offset;
      ++length;
    }
    out.push_back({p, length, Closure::Closed});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.start < b.start; });
  return out;
}

std::vector<Position> interval_positions(const BoothState& state, const Interval& iv) {
  const std::uint32_t n = state.size();
  std::vector<Position> out;
  out.reserve(iv.length);
  for (std::uint32_t i = 0; i < iv.length; ++i) out.push_back((iv.start - 1 + i) % n + 1);
  return out;
}

std::uint32_t nearest_distance(const BoothState& state, Position pos) {
  if (state.empty()) throw std::domain_error("nearest_distance: no payphone is occupied");
  if (!state.available(pos))
    throw std::domain_error("nearest_distance: payphone " + std::to_string(pos) + " is occupied");
  const std::uint32_t n = state.size();
  std::uint32_t best = n;
  for (Position q = 1; q <= n; ++q) {
    if (state.available(q)) continue;
    std::uint32_t d = pos > q ? pos - q : q - pos;
    if (state.layout() == Layout::Circle) d = std::min(d, n - d);
    best = std::min(best, d);
  }
  return best;
}

std::uint32_t occupied_neighbours(const BoothState& state, Position pos) {
  const std::uint32_t n = state.size();
  std::vector<Position> around;
  if (state.layout() == Layout::Row) {
    if (pos > 1) around.push_back(pos - 1);
    if (pos < n) around.push_back(pos + 1);
  } else {
    around.push_back((pos + n - 2) % n + 1);
    around.push_back(pos % n + 1);
  }
  std::sort(around.begin(), around.end());
  around.erase(std::unique(around.begin(), around.end()), around.end());
  return static_cast<std::uint32_t>(
      std::count_if(around.begin(), around.end(),
                    [&](Position q) { return q != pos && !state.available(q); }));
}

namespace {

std::vector<Position> all_positions(std::uint32_t n) {
  std::vector<Position> out(n);
  for (std::uint32_t i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

// Global argmax of nearest_distance; also reports the maximum.
std::vector<Position> farthest_positions(const BoothState& state, std::uint32_t& best) {
  std::vector<Position> out;
  best = 0;
  for (Position p = 1; p <= state.size(); ++p) {
    if (!state.available(p)) continue;
    const std::uint32_t d = nearest_distance(state, p);
    if (d > best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(p);
  }
  return out;
}

// Longest intervals by full length, then argmax of distance inside each.
std::vector<Position> longest_interval_positions(const BoothState& state, std::uint32_t& best_full) {
  const auto runs = intervals(state);
  best_full = 0;
  for (const auto& iv : runs) best_full = std::max(best_full, iv.full_length());

  std::vector<Position> out;
  for (const auto& iv : runs) {
    if (iv.full_length() != best_full) continue;
    std::uint32_t inner = 0;
    std::vector<Position> middle;
    for (Position p : interval_positions(state, iv)) {
      const std::uint32_t d = nearest_distance(state, p);
      if (d > inner) {
        inner = d;
        middle.clear();
      }
      if (d == inner) middle.push_back(p);
    }
    out.insert(out.end(), middle.begin(), middle.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Positions forming a semi-closed interval of length one.
std::vector<Position> semi_closed_singletons(const BoothState& state) {
  std::vector<Position> out;
  for (const auto& iv : intervals(state))
    if (iv.closure == Closure::SemiClosed && iv.length == 1) out.push_back(iv.start);
  return out;
}

template <typename Pred>
void restrict_if_any(std::vector<Position>& choices, Pred keep) {
  std::vector<Position> kept;
  std::copy_if(choices.begin(), choices.end(), std::back_inserter(kept), keep);
  if (!kept.empty()) choices = std::move(kept);
}

bool contains(const std::vector<Position>& v, Position p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

std::vector<Position> allowed_choices(const BoothState& state, RuleKind rule) {
  if (state.full()) throw std::domain_error("allowed_choices: no payphone is available");
  if (state.empty()) return all_positions(state.size());

  std::uint32_t best = 0;
  switch (rule) {
    case RuleKind::P1:
    case RuleKind::C1:
      return farthest_positions(state, best);

    case RuleKind::P3: {
      auto choices = farthest_positions(state, best);
      if (best == 1) {
        const auto ends = semi_closed_singletons(state);
        restrict_if_any(choices, [&](Position p) { return contains(ends, p); });
      }
      return choices;
    }

    case RuleKind::P5: {
      auto choices = farthest_positions(state, best);
      if (best == 1)
        restrict_if_any(choices, [&](Position p) { return occupied_neighbours(state, p) == 1; });
      return choices;
    }

    case RuleKind::P2:
    case RuleKind::C2:
      return longest_interval_positions(state, best);

    case RuleKind::P4: {
      auto choices = longest_interval_positions(state, best);
      if (best == 1) {
        const auto ends = semi_closed_singletons(state);
        restrict_if_any(choices, [&](Position p) { return contains(ends, p); });
      }
      return choices;
    }
  }
  throw std::logic_error("allowed_choices: unhandled rule");
}

std::string PayphonePermutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i) os << ',';
    os << assignment[i];
  }
  return os.str();
}

PayphonePermutation PayphonePermutation::parse(const std::string& text) {
  PayphonePermutation out;
  std::istringstream is(text);
  std::string field;
  while (std::getline(is, field, ',')) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad permutation entry '" + field + "' in '" + text + "'");
    out.assignment.push_back(static_cast<Person>(std::stoul(field)));
  }
  if (out.assignment.empty()) throw std::invalid_argument("empty permutation");
  return out;
}

bool PayphonePermutation::is_bijection() const {
  std::vector<bool> seen(assignment.size() + 1, false);
  for (Person p : assignment) {
    if (p < 1 || p > assignment.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

namespace {

void check_size(std::uint32_t n, std::uint32_t limit) {
  if (n == 0) throw std::domain_error("enumerate: n must be >= 1");
  if (n > limit)
    throw std::length_error("enumerate: n = " + std::to_string(n) +
                            " exceeds the exhaustive-search limit of " + std::to_string(limit) +
                            " (raise the limit explicitly to go further)");
}

template <typename Leaf>
void expand(const BoothState& state, RuleKind rule, Leaf& leaf) {
  if (state.full()) {
    leaf(state);
    return;
  }
  for (Position p : allowed_choices(state, rule)) expand(state.step(p), rule, leaf);
}

// Runs `work(first_position)` for every first choice concurrently and
// returns the results in ascending position order.
template <typename Work>
auto per_first_choice(std::uint32_t n, Work work) {
  using Result = decltype(work(Position{1}));
  std::vector<std::future<Result>> jobs;
  jobs.reserve(n);
  const auto policy = n >= 8 ? std::launch::async : std::launch::deferred;
  for (Position p = 1; p <= n; ++p) jobs.push_back(std::async(policy, work, p));
  std::vector<Result> out;
  out.reserve(n);
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace

std::vector<PayphonePermutation> enumerate(RuleKind rule, std::uint32_t n, std::uint32_t limit) {
  check_size(n, limit);
  const Layout layout = layout_of(rule);
  auto parts = per_first_choice(n, [&](Position first) {
    std::vector<PayphonePermutation> found;
    auto leaf = [&](const BoothState& s) { found.push_back({s.occupants()}); };
    expand(BoothState(layout, n).step(first), rule, leaf);
    return found;
  });

  std::vector<PayphonePermutation> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigCount count_by_enumeration(RuleKind rule, std::uint32_t n, std::uint32_t limit) {
  check_size(n, limit);
  const Layout layout = layout_of(rule);
  // Each DFS path fixes the arrival order, so paths and permutations are
  // in bijection and counting leaves needs no deduplication.
  auto parts = per_first_choice(n, [&](Position first) {
    std::uint64_t leaves = 0;
    auto leaf = [&](const BoothState&) { ++leaves; };
    expand(BoothState(layout, n).step(first), rule, leaf);
    return leaves;
  });
  BigCount total;
  for (std::uint64_t part : parts) total += BigCount(part);
  return total;
}

PayphonePermutation sample_run(RuleKind rule, std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw std::domain_error("sample_run: n must be >= 1");
  std::mt19937_64 gen(seed);
  BoothState state(layout_of(rule), n);
  while (!state.full()) {
    const auto choices = allowed_choices(state, rule);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    state = state.step(choices[pick(gen)]);
  }
  return {state.occupants()};
}

}  // namespace privperm
