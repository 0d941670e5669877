#include "permc/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permc {

Pattern extract_pattern(Prefix& p, uint64_t pos, uint32_t n, uint64_t cap) {
  if (n < 2) throw std::invalid_argument("patterns need length >= 2");
  std::vector<uint32_t> offsets(n);
  std::iota(offsets.begin(), offsets.end(), 0u);
  std::sort(offsets.begin(), offsets.end(), [&](uint32_t a, uint32_t b) {
    return compare_suffixes(p, pos + a, pos + b, cap) == Order::Less;
  });
  std::vector<uint16_t> ranks(n);
  for (uint32_t r = 0; r < n; ++r) {
    ranks[offsets[r]] = static_cast<uint16_t>(r + 1);
  }
  return Pattern(std::move(ranks));
}

Pattern extract_pattern(InfiniteWord& w, uint64_t pos, uint32_t n) {
  return extract_pattern(w.prefix(), pos, n, w.lookahead_cap());
}

const PatternSets& pattern_sets(InfiniteWord& w, std::string_view u) {
  return w.pattern_sets_of(u);
}

bool is_special(InfiniteWord& w, std::string_view v) {
  std::string extended(v);
  extended += '0';
  if (!w.is_factor(extended)) return false;
  extended.back() = '1';
  return w.is_factor(extended);
}

SpecialStats special_stats(InfiniteWord& w, std::string_view v) {
  if (!is_special(w, v)) {
    throw Error(ErrorCode::NotAFactor,
                std::string(v) + " is not a special factor");
  }
  std::string v0(v), v1(v);
  v0 += '0';
  v1 += '1';

  // The extension starting the same way as v is the one that can carry
  // equivalent pairs; the opposite extension cannot.
  const bool zero_side = v.front() == '0';
  const PatternSets& pair_side = pattern_sets(w, zero_side ? v0 : v1);
  const PatternSets& flat_side = pattern_sets(w, zero_side ? v1 : v0);
  if (!flat_side.n_pairs.empty()) {
    throw Error(ErrorCode::InvariantViolation,
                "extension " + (zero_side ? v1 : v0) +
                    " generates an equivalent pair, which the special-word "
                    "statistics rule out");
  }

  SpecialStats stats;
  for (const Pattern& x : pair_side.m_set) {
    if (flat_side.m_set.count(x)) ++stats.k;
    for (const Pattern& y : flat_side.m_set) {
      if (equivalent(x, y)) {
        ++stats.t;
        break;
      }
    }
  }
  for (const auto& [a, b] : pair_side.n_pairs) {
    if (flat_side.m_set.count(a) || flat_side.m_set.count(b)) ++stats.r;
  }
  return stats;
}

}  // namespace permc
