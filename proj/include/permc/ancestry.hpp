#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "permc/patterns.hpp"
#include "permc/word.hpp"

namespace permc {

/// <v, i, j>: erasing i symbols from the left and j from the right of the
/// image of v yields the interpreted word.
struct Interpretation {
  std::string ancestor;
  uint32_t left_cut = 0;
  uint32_t right_cut = 0;

  bool operator==(const Interpretation&) const = default;
};

/// Unique interpretation when all observed occurrences share one phase;
/// nullopt when phases disagree (only possible below the synchronization
/// length). Throws NotAFactor for non-factors.
std::optional<Interpretation> try_interpret(InfiniteWord& w,
                                            std::string_view u);

/// Unique interpretation of a factor of length >= sync_length.
Interpretation interpret(InfiniteWord& w, std::string_view u);

/// u = u_0, u_1, ..., u_m with each u_{i+1} the ancestor of u_i; u_m is the
/// first element shorter than the synchronization length.
std::vector<std::string> ancestor_chain(InfiniteWord& w, std::string_view u);

struct ChainLink {
  std::string word;
  Interpretation interp;  // interpretation of word (ancestor = next element)
};

/// The chain with per-step cuts; links cover u_0 .. u_{m-1}.
std::vector<ChainLink> ancestor_chain_links(InfiniteWord& w,
                                            std::string_view u);

enum class WordClass { Bad, Narrow, Wide, Neutral };

const char* word_class_name(WordClass c);

/// Bad when the word itself generates an equivalent pair. Otherwise, with
/// u_k the first bad word in the chain and <u_k, i, j> the interpretation
/// of u_{k-1}: Narrow when i+1 > l-j, Wide when i+1 < l-j. Neutral when the
/// chain has no bad word. The unnamed boundary i+1 = l-j is surfaced as
/// DegenerateBoundary.
WordClass classify(InfiniteWord& w, std::string_view u);

struct Classified {
  std::string terminal;
  WordClass word_class = WordClass::Neutral;
};

Classified classify_with_terminal(InfiniteWord& w, std::string_view u);

/// Chain terminal of a special word. Special-word chains keep stepping below
/// the synchronization length while the interpretation stays unique; they
/// stop at the first phase-ambiguous word.
std::string special_chain_terminal(InfiniteWord& w, std::string_view v);

enum class CountKind { Bad, Narrow, Wide, Any, Special };

const char* count_kind_name(CountKind k);
CountKind count_kind_from_name(std::string_view name);

struct SeedStats {
  uint64_t m = 0;  // |M_a|
  uint64_t n = 0;  // |N_a| (number of pairs)

  bool operator==(const SeedStats&) const = default;
};

/// Everything the counting recurrences need: the synchronization length,
/// the chain-terminal seeds with their pattern statistics, the special
/// seeds with their overlap statistics, and brute-force count tables for
/// every length up to base_threshold.
struct SeedTables {
  uint32_t sync_length = 0;
  uint32_t base_threshold = 0;
  std::map<std::string, SeedStats> a1;      // bad seeds
  std::map<std::string, uint64_t> a2;       // seed -> m_a
  std::map<std::string, SpecialStats> b;    // special seeds
  std::map<std::tuple<std::string, CountKind, uint32_t>, uint64_t> base_counts;

  uint64_t base_count(const std::string& seed, CountKind kind,
                      uint32_t n) const {
    auto it = base_counts.find({seed, kind, n});
    return it == base_counts.end() ? 0 : it->second;
  }

  bool is_word_seed(const std::string& seed) const {
    return a1.count(seed) || a2.count(seed);
  }
};

SeedTables build_seed_tables(InfiniteWord& w);

/// Chain terminal and class of every factor of one length, by direct
/// enumeration. Feeds the base tables and validates the recurrences.
std::map<std::pair<std::string, WordClass>, uint64_t> classified_counts(
    InfiniteWord& w, uint32_t n);

nlohmann::json seed_tables_to_json(const SeedTables& t);
SeedTables seed_tables_from_json(const nlohmann::json& j);

}  // namespace permc
