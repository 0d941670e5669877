#pragma once

#include <string_view>

#include "permc/pattern.hpp"
#include "permc/word.hpp"

namespace permc {

/// Pattern induced by the suffix values R(pos) ... R(pos+n-1): ranks[s] <
/// ranks[t] iff R(pos+s) < R(pos+t). Decided by direct suffix comparison.
Pattern extract_pattern(Prefix& p, uint64_t pos, uint32_t n, uint64_t cap);

Pattern extract_pattern(InfiniteWord& w, uint64_t pos, uint32_t n);

/// M_u / N_u of a factor: the generated patterns, equivalent pairs removed
/// into n_pairs. f(u) = |m_set| + 2 |n_pairs|.
const PatternSets& pattern_sets(InfiniteWord& w, std::string_view u);

/// v is special when both v0 and v1 are factors.
bool is_special(InfiniteWord& w, std::string_view v);

struct SpecialStats {
  uint64_t k = 0;  // patterns common to M_{v0} and M_{v1}
  uint64_t t = 0;  // patterns of the pair-capable side's M equivalent to one across
  uint64_t r = 0;  // pairs of the pair-capable side's N with one member across

  bool operator==(const SpecialStats&) const = default;
};

/// k/t/r overlap statistics of the one-symbol extensions of a special word.
/// The side that can generate equivalent pairs is v0 when v starts with 0
/// and v1 when v starts with 1; the other extension is checked to have no
/// pairs, as the theory requires.
SpecialStats special_stats(InfiniteWord& w, std::string_view v);

}  // namespace permc
