#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permc/morphism.hpp"
#include "permc/pattern.hpp"

namespace permc {

/// Resource caps. Every potentially unbounded search is cut off by one of
/// these and surfaces as a diagnosable error instead of a hang.
struct Limits {
  uint64_t max_survey = 1ull << 20;  // longest prefix enumerated window-by-window
  uint64_t lookahead_factor = 64;    // suffix comparison cap = factor * l * L
  uint32_t sync_search_factor = 8;   // synchronization length tested up to factor * l
  uint32_t base_threshold_override = 0;  // 0 = l * (L + 2)
  uint32_t occurrence_budget = 48;   // occurrences examined per factor at the first
                                     // pattern-survey depth; doubles with each depth
  uint32_t occurrence_budget_cap = 1024;
};

enum class Order { Less, Greater };

/// 1-based start position of a factor occurrence, matching w_1 w_2 ...
struct Occurrence {
  uint64_t position = 0;
  uint32_t length = 0;

  auto operator<=>(const Occurrence&) const = default;
};

/// phi^d(0) with on-demand growth by whole re-applications of the morphism.
/// Growth keeps block boundaries aligned at position 1, which everything
/// downstream (phases, interpretations) relies on.
class Prefix {
 public:
  Prefix(Morphism m, uint64_t storage_cap);

  /// Grows to at least min_len symbols.
  void ensure(uint64_t min_len);

  /// 1-based symbol access; grows transparently.
  char at(uint64_t i) {
    if (i > symbols_.size()) ensure(i);
    return symbols_[i - 1];
  }

  uint64_t size() const { return symbols_.size(); }
  uint32_t depth() const { return depth_; }
  std::string_view view() const { return symbols_; }
  const Morphism& morphism() const { return morphism_; }
  uint64_t storage_cap() const { return storage_cap_; }

 private:
  Morphism morphism_;
  std::string symbols_;  // phi^depth(0)
  uint32_t depth_ = 0;
  uint64_t storage_cap_;
};

/// phi^d(0) for the smallest d with l^d >= min_len.
Prefix fixed_point_prefix(const Morphism& m, uint64_t min_len,
                          uint64_t storage_cap = (1ull << 20) * 8);

/// Order of the suffix values R(i) and R(j): decided by the first index k
/// with w_{i+k} != w_{j+k}. Throws LookaheadCapExceeded if no difference
/// shows up within cap symbols.
Order compare_suffixes(Prefix& p, uint64_t i, uint64_t j, uint64_t cap);

/// Ranks the suffixes starting at positions 1..count by their R values.
/// A bulk-precomputed form of compare_suffixes: less(i, j) holds iff
/// R(i) < R(j).
class SuffixOrder {
 public:
  SuffixOrder(Prefix& p, uint64_t count, uint64_t lookahead_cap);

  uint64_t count() const { return rank_.size(); }
  uint32_t rank(uint64_t pos) const { return rank_[pos - 1]; }  // 1-based pos
  bool less(uint64_t i, uint64_t j) const { return rank(i) < rank(j); }

 private:
  std::vector<uint32_t> rank_;
};

struct FactorInfo {
  std::vector<uint64_t> first_positions;  // up to 8, increasing, 1-based
  uint64_t total = 0;                     // occurrences in the surveyed prefix
  uint64_t phase_mask = 0;                // bit p: occurrence with (pos-1) % l == p
};

/// All length-n factors with occurrence data, stabilized: the factor set and
/// the phase sets are identical at depth-1 and depth.
struct LengthCensus {
  uint32_t n = 0;
  uint32_t depth = 0;
  std::map<std::string, FactorInfo> factors;
};

/// Per-factor generated pattern sets at one length, stabilized across two
/// consecutive depths with a doubling occurrence budget.
struct PatternCensus {
  uint32_t n = 0;
  uint32_t depth = 0;
  std::map<std::string, PatternSets> by_factor;
};

/// The fixed point as an analysable object: symbol access, suffix-order
/// queries, stabilized factor/pattern enumeration, synchronization length.
/// Mutation is growth only; grow-and-read call sequences are single-writer.
class InfiniteWord {
 public:
  explicit InfiniteWord(Morphism m, Limits limits = {});

  const Morphism& morphism() const { return morphism_; }
  const Limits& limits() const { return limits_; }
  Prefix& prefix() { return prefix_; }
  int block_length() const { return morphism_.length(); }

  char symbol(uint64_t i) { return prefix_.at(i); }
  Order compare(uint64_t i, uint64_t j);
  uint64_t lookahead_cap();

  const LengthCensus& census(uint32_t n);
  const PatternCensus& pattern_census(uint32_t n);
  const SuffixOrder& order_at_depth(uint32_t depth);

  std::vector<std::string> factors(uint32_t n);
  bool is_factor(std::string_view u);
  std::vector<Occurrence> occurrences(std::string_view u, size_t max_count);
  std::set<uint32_t> phases(std::string_view u);

  /// Minimal L such that every length-L factor occurs at a single phase
  /// class mod l (equivalently, has a unique parse into blocks).
  uint32_t sync_length();

  const PatternSets& pattern_sets_of(std::string_view u);

  /// One pattern survey pass at a fixed depth, examining up to budget
  /// occurrences per factor (UINT32_MAX = every occurrence).
  PatternCensus scan_patterns(uint32_t n, uint32_t depth, uint32_t budget);

  uint64_t depth_size(uint32_t depth) const;

 private:
  LengthCensus scan_census(uint32_t n, uint32_t depth);
  uint32_t initial_depth(uint32_t n) const;

  Morphism morphism_;
  Limits limits_;
  Prefix prefix_;
  std::optional<uint32_t> sync_;
  std::map<uint32_t, LengthCensus> censuses_;
  std::map<uint32_t, PatternCensus> pattern_censuses_;
  std::map<uint32_t, SuffixOrder> orders_;
};

/// Newline-delimited, lexicographically sorted factor dump (golden-test
/// friendly).
std::string dump_factors(InfiniteWord& w, uint32_t n);

}  // namespace permc
