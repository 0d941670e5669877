#include "permc/word.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace permc {

namespace {

/// Distinct windows of length n over s[0..P), identified by rolling hash
/// with exact verification. ids[i] names the factor starting at offset i.
struct WindowIds {
  std::vector<std::string> words;
  std::vector<uint32_t> ids;
};

WindowIds identify_windows(std::string_view s, uint64_t window_count,
                           uint32_t n) {
  constexpr uint64_t kMul = 0x9E3779B97F4A7C15ull;
  WindowIds out;
  out.ids.resize(window_count);
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

  uint64_t pow_top = 1;  // kMul^(n-1)
  for (uint32_t t = 0; t + 1 < n; ++t) pow_top *= kMul;
  uint64_t h = 0;
  for (uint32_t t = 0; t < n; ++t) h = h * kMul + static_cast<uint8_t>(s[t]);

  for (uint64_t i = 0; i < window_count; ++i) {
    if (i > 0) {
      h = (h - static_cast<uint8_t>(s[i - 1]) * pow_top) * kMul +
          static_cast<uint8_t>(s[i + n - 1]);
    }
    auto& bucket = buckets[h];
    uint32_t id = UINT32_MAX;
    for (uint32_t candidate : bucket) {
      if (std::memcmp(out.words[candidate].data(), s.data() + i, n) == 0) {
        id = candidate;
        break;
      }
    }
    if (id == UINT32_MAX) {
      id = static_cast<uint32_t>(out.words.size());
      out.words.emplace_back(s.substr(i, n));
      bucket.push_back(id);
    }
    out.ids[i] = id;
  }
  return out;
}

bool census_stable(const LengthCensus& a, const LengthCensus& b) {
  if (a.factors.size() != b.factors.size()) return false;
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  for (; ia != a.factors.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.phase_mask != ib->second.phase_mask) return false;
  }
  return true;
}

}  // namespace

Prefix::Prefix(Morphism m, uint64_t storage_cap)
    : morphism_(std::move(m)), symbols_("0"), storage_cap_(storage_cap) {}

void Prefix::ensure(uint64_t min_len) {
  while (symbols_.size() < min_len) {
    uint64_t next = symbols_.size() * morphism_.length();
    if (next > storage_cap_) {
      throw Error(ErrorCode::LengthCapExceeded,
                  "prefix growth beyond configured cap (" +
                      std::to_string(storage_cap_) + " symbols)");
    }
    symbols_ = morphism_.apply(symbols_);
    ++depth_;
  }
}

Prefix fixed_point_prefix(const Morphism& m, uint64_t min_len,
                          uint64_t storage_cap) {
  Prefix p(m, storage_cap);
  p.ensure(min_len);
  return p;
}

Order compare_suffixes(Prefix& p, uint64_t i, uint64_t j, uint64_t cap) {
  if (i == j) throw std::invalid_argument("compare_suffixes requires i != j");
  for (uint64_t k = 0; k < cap; ++k) {
    char a = p.at(i + k);
    char b = p.at(j + k);
    if (a != b) return a < b ? Order::Less : Order::Greater;
  }
  throw Error(ErrorCode::LookaheadCapExceeded,
              "suffixes at " + std::to_string(i) + " and " + std::to_string(j) +
                  " agree for " + std::to_string(cap) +
                  " symbols (periodic word or cap too low?)");
}

SuffixOrder::SuffixOrder(Prefix& p, uint64_t count, uint64_t lookahead_cap) {
  if (count > UINT32_MAX) {
    throw Error(ErrorCode::LengthCapExceeded, "suffix order limited to 2^32");
  }
  p.ensure(count + lookahead_cap);
  const std::string_view s = p.view();

  std::vector<uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    const char* sa = s.data() + a;
    const char* sb = s.data() + b;
    uint64_t k = 0;
    while (k < lookahead_cap) {
      size_t chunk = static_cast<size_t>(std::min<uint64_t>(64, lookahead_cap - k));
      int c = std::memcmp(sa + k, sb + k, chunk);
      if (c != 0) return c < 0;
      k += chunk;
    }
    throw Error(ErrorCode::LookaheadCapExceeded,
                "indistinguishable suffixes within lookahead cap");
  });

  rank_.resize(count);
  for (uint64_t r = 0; r < count; ++r) rank_[idx[r]] = static_cast<uint32_t>(r + 1);
}

InfiniteWord::InfiniteWord(Morphism m, Limits limits)
    : morphism_(std::move(m)),
      limits_(limits),
      // Storage allows one growth step past the survey cap plus lookahead
      // tails read by suffix comparisons.
      prefix_(morphism_, limits_.max_survey * (morphism_.length() + 1)) {
  if (morphism_.length() > 64) {
    throw Error(ErrorCode::LengthCapExceeded,
                "phase tracking supports block length up to 64");
  }
}

uint64_t InfiniteWord::lookahead_cap() {
  uint64_t l = morphism_.length();
  uint64_t scale = sync_ ? *sync_ : 8 * l;
  return limits_.lookahead_factor * l * scale;
}

Order InfiniteWord::compare(uint64_t i, uint64_t j) {
  return compare_suffixes(prefix_, i, j, lookahead_cap());
}

uint64_t InfiniteWord::depth_size(uint32_t depth) const {
  uint64_t size = 1;
  for (uint32_t d = 0; d < depth; ++d) size *= morphism_.length();
  return size;
}

uint32_t InfiniteWord::initial_depth(uint32_t n) const {
  uint64_t target = std::max<uint64_t>(1024, 32ull * n);
  if (target > limits_.max_survey) target = limits_.max_survey;
  if (target < n + 1ull) target = n + 1ull;
  if (target > limits_.max_survey) {
    throw Error(ErrorCode::StabilizationCapExceeded,
                "factor length exceeds the survey cap");
  }
  uint32_t d = 0;
  uint64_t size = 1;
  while (size < target) {
    size *= morphism_.length();
    ++d;
  }
  return d;
}

LengthCensus InfiniteWord::scan_census(uint32_t n, uint32_t depth) {
  const uint64_t size = depth_size(depth);
  prefix_.ensure(size);
  const std::string_view s = prefix_.view().substr(0, size);
  const uint64_t window_count = size - n + 1;
  const uint32_t l = morphism_.length();

  WindowIds win = identify_windows(s, window_count, n);
  std::vector<FactorInfo> info(win.words.size());
  for (uint64_t i = 0; i < window_count; ++i) {
    FactorInfo& fi = info[win.ids[i]];
    fi.total += 1;
    fi.phase_mask |= 1ull << (i % l);
    if (fi.first_positions.size() < 8) fi.first_positions.push_back(i + 1);
  }

  LengthCensus census;
  census.n = n;
  census.depth = depth;
  for (size_t id = 0; id < win.words.size(); ++id) {
    census.factors.emplace(std::move(win.words[id]), std::move(info[id]));
  }
  return census;
}

const LengthCensus& InfiniteWord::census(uint32_t n) {
  if (n == 0) throw std::invalid_argument("factor length must be positive");
  auto it = censuses_.find(n);
  if (it != censuses_.end()) return it->second;

  uint32_t d = initial_depth(n);
  LengthCensus prev = scan_census(n, d);
  while (true) {
    if (depth_size(d + 1) > limits_.max_survey) {
      throw Error(ErrorCode::StabilizationCapExceeded,
                  "factor census for length " + std::to_string(n) +
                      " did not stabilize within the survey cap");
    }
    LengthCensus cur = scan_census(n, d + 1);
    if (census_stable(prev, cur)) {
      return censuses_.emplace(n, std::move(cur)).first->second;
    }
    prev = std::move(cur);
    ++d;
  }
}

const SuffixOrder& InfiniteWord::order_at_depth(uint32_t depth) {
  auto it = orders_.find(depth);
  if (it != orders_.end()) return it->second;
  SuffixOrder order(prefix_, depth_size(depth), lookahead_cap());
  return orders_.emplace(depth, std::move(order)).first->second;
}

PatternCensus InfiniteWord::scan_patterns(uint32_t n, uint32_t depth,
                                          uint32_t budget) {
  const uint64_t size = depth_size(depth);
  prefix_.ensure(size);
  const SuffixOrder& order = order_at_depth(depth);
  const std::string_view s = prefix_.view().substr(0, size);
  const uint64_t window_count = size - n + 1;

  WindowIds win = identify_windows(s, window_count, n);

  // Per factor: the distinct patterns seen so far, each with the window
  // offsets listed in increasing-rank order. A window matches an existing
  // pattern iff its ranks increase along that offset list; only genuinely
  // new patterns pay for a full extraction.
  struct Entry {
    Pattern pattern;
    std::vector<uint32_t> offsets_by_rank;
  };
  struct State {
    uint32_t examined = 0;
    std::vector<Entry> entries;
  };
  std::vector<State> states(win.words.size());

  for (uint64_t i = 0; i < window_count; ++i) {
    State& st = states[win.ids[i]];
    if (st.examined >= budget) continue;
    ++st.examined;
    const uint64_t pos = i + 1;

    bool matched = false;
    for (const Entry& e : st.entries) {
      bool ok = true;
      uint32_t prev_rank = order.rank(pos + e.offsets_by_rank[0]);
      for (uint32_t t = 1; t < n; ++t) {
        uint32_t r = order.rank(pos + e.offsets_by_rank[t]);
        if (r < prev_rank) {
          ok = false;
          break;
        }
        prev_rank = r;
      }
      if (ok) {
        matched = true;
        break;
      }
    }
    if (matched) continue;

    Entry e;
    e.offsets_by_rank.resize(n);
    std::iota(e.offsets_by_rank.begin(), e.offsets_by_rank.end(), 0u);
    std::sort(e.offsets_by_rank.begin(), e.offsets_by_rank.end(),
              [&](uint32_t a, uint32_t b) {
                return order.rank(pos + a) < order.rank(pos + b);
              });
    std::vector<uint16_t> ranks(n);
    for (uint32_t r = 0; r < n; ++r) {
      ranks[e.offsets_by_rank[r]] = static_cast<uint16_t>(r + 1);
    }
    e.pattern = Pattern(std::move(ranks));
    st.entries.push_back(std::move(e));
  }

  PatternCensus census;
  census.n = n;
  census.depth = depth;
  for (size_t id = 0; id < win.words.size(); ++id) {
    std::set<Pattern> generated;
    for (const Entry& e : states[id].entries) generated.insert(e.pattern);
    census.by_factor.emplace(std::move(win.words[id]),
                             split_pattern_sets(generated));
  }
  return census;
}

const PatternCensus& InfiniteWord::pattern_census(uint32_t n) {
  auto it = pattern_censuses_.find(n);
  if (it != pattern_censuses_.end()) return it->second;

  uint32_t d = census(n).depth;
  uint32_t budget = limits_.occurrence_budget;
  PatternCensus prev = scan_patterns(n, d, budget);
  while (true) {
    if (depth_size(d + 1) > limits_.max_survey) {
      throw Error(ErrorCode::StabilizationCapExceeded,
                  "pattern census for length " + std::to_string(n) +
                      " did not stabilize within the survey cap");
    }
    uint32_t next_budget =
        std::min(budget * 2, limits_.occurrence_budget_cap);
    PatternCensus cur = scan_patterns(n, d + 1, next_budget);
    if (prev.by_factor == cur.by_factor) {
      return pattern_censuses_.emplace(n, std::move(cur)).first->second;
    }
    prev = std::move(cur);
    ++d;
    budget = next_budget;
  }
}

std::vector<std::string> InfiniteWord::factors(uint32_t n) {
  const LengthCensus& c = census(n);
  std::vector<std::string> out;
  out.reserve(c.factors.size());
  for (const auto& [word, info] : c.factors) out.push_back(word);
  return out;
}

bool InfiniteWord::is_factor(std::string_view u) {
  const LengthCensus& c = census(static_cast<uint32_t>(u.size()));
  return c.factors.find(std::string(u)) != c.factors.end();
}

std::vector<Occurrence> InfiniteWord::occurrences(std::string_view u,
                                                  size_t max_count) {
  if (u.empty()) throw std::invalid_argument("occurrences of the empty word");
  const LengthCensus& c = census(static_cast<uint32_t>(u.size()));
  const std::string_view s = prefix_.view().substr(0, depth_size(c.depth));
  std::vector<Occurrence> out;
  size_t from = 0;
  while (out.size() < max_count) {
    size_t pos = s.find(u, from);
    if (pos == std::string_view::npos) break;
    out.push_back(Occurrence{pos + 1, static_cast<uint32_t>(u.size())});
    from = pos + 1;
  }
  return out;
}

std::set<uint32_t> InfiniteWord::phases(std::string_view u) {
  const LengthCensus& c = census(static_cast<uint32_t>(u.size()));
  auto it = c.factors.find(std::string(u));
  if (it == c.factors.end()) {
    throw Error(ErrorCode::NotAFactor,
                std::string(u) + " is not a factor of the fixed point");
  }
  std::set<uint32_t> out;
  for (uint32_t p = 0; p < 64; ++p) {
    if (it->second.phase_mask & (1ull << p)) out.insert(p);
  }
  return out;
}

uint32_t InfiniteWord::sync_length() {
  if (sync_) return *sync_;
  const uint32_t l = morphism_.length();
  const uint32_t bound = limits_.sync_search_factor * l;
  for (uint32_t candidate = 1; candidate <= bound; ++candidate) {
    const LengthCensus& c = census(candidate);
    bool all_single_phase = true;
    for (const auto& [word, info] : c.factors) {
      if (std::popcount(info.phase_mask) != 1) {
        all_single_phase = false;
        break;
      }
    }
    if (all_single_phase) {
      sync_ = candidate;
      return candidate;
    }
  }
  throw Error(ErrorCode::NotCircular,
              "no synchronization length up to " + std::to_string(bound));
}

const PatternSets& InfiniteWord::pattern_sets_of(std::string_view u) {
  const PatternCensus& c = pattern_census(static_cast<uint32_t>(u.size()));
  auto it = c.by_factor.find(std::string(u));
  if (it == c.by_factor.end()) {
    throw Error(ErrorCode::NotAFactor,
                std::string(u) + " is not a factor of the fixed point");
  }
  return it->second;
}

std::string dump_factors(InfiniteWord& w, uint32_t n) {
  std::string out;
  for (const auto& word : w.factors(n)) {
    out += word;
    out += '\n';
  }
  return out;
}

}  // namespace permc
