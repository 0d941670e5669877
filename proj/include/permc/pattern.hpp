#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permc/errors.hpp"

namespace permc {

/// A finite permutation pi_1 ... pi_n recording the relative order of n
/// consecutive suffix values: ranks[s] < ranks[t] iff the suffix starting
/// at window offset s is smaller. Ranks are 1..n.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<uint16_t> ranks) : ranks_(std::move(ranks)) {}

  size_t size() const { return ranks_.size(); }
  uint16_t operator[](size_t i) const { return ranks_[i]; }  // 0-based
  const std::vector<uint16_t>& ranks() const { return ranks_; }

  /// Canonical serialization: space-separated ranks, e.g. "1 3 2".
  std::string to_string() const;

  /// Parses "1 3 2"; also accepts compact digit strings like "132" for
  /// lengths up to 9.
  static Pattern from_string(std::string_view text);

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<uint16_t> ranks_;
};

/// gamma(x_1, x_k) differs while every other index pair agrees.
bool equivalent(const Pattern& x, const Pattern& y);

/// Necessary and sufficient for an equivalent partner to exist: the first
/// and last ranks are neighbours, |x_1 - x_k| = 1.
bool can_have_equivalent(const Pattern& x);

/// The only candidate partner: the permutation with the values x_1 and x_k
/// exchanged (all non-extreme relations are preserved exactly by swapping
/// two neighbouring values).
Pattern extreme_swapped(const Pattern& x);

/// Patterns generated by a word, partitioned into equivalent pairs (n_pairs)
/// and the remaining singletons (m_set).
struct PatternSets {
  std::set<Pattern> m_set;
  std::set<std::pair<Pattern, Pattern>> n_pairs;  // each pair stored ordered

  bool operator==(const PatternSets&) const = default;

  uint64_t m() const { return m_set.size(); }
  uint64_t n() const { return n_pairs.size(); }
  uint64_t f() const { return m() + 2 * n(); }
  bool bad() const { return !n_pairs.empty(); }

  /// Every generated pattern, pairs unfolded.
  std::set<Pattern> all() const;
};

/// Splits a raw generated-pattern set into equivalent pairs and the rest.
PatternSets split_pattern_sets(const std::set<Pattern>& generated);

}  // namespace permc
