#include "permc/ancestry.hpp"

#include <bit>

namespace permc {

namespace {

Interpretation derive_interpretation(InfiniteWord& w, std::string_view u,
                                     uint64_t position, uint32_t phase) {
  const uint32_t l = w.block_length();
  const uint64_t len = u.size();
  const uint32_t i = phase;
  const uint32_t j = static_cast<uint32_t>((l - (i + len) % l) % l);

  const uint64_t block_start = position - i;          // 1-based, phase 0
  const uint64_t first_symbol = (block_start - 1) / l + 1;
  const uint64_t block_count = (i + len + j) / l;

  Interpretation interp;
  interp.left_cut = i;
  interp.right_cut = j;
  interp.ancestor.reserve(block_count);
  w.prefix().ensure(first_symbol + block_count - 1);
  for (uint64_t s = 0; s < block_count; ++s) {
    interp.ancestor += w.symbol(first_symbol + s);
  }

  std::string image = w.morphism().apply(interp.ancestor);
  if (std::string_view(image).substr(i, len) != u) {
    throw Error(ErrorCode::InvariantViolation,
                "interpretation of " + std::string(u) +
                    " does not reconstruct the word");
  }
  return interp;
}

}  // namespace

std::optional<Interpretation> try_interpret(InfiniteWord& w,
                                            std::string_view u) {
  const LengthCensus& c = w.census(static_cast<uint32_t>(u.size()));
  auto it = c.factors.find(std::string(u));
  if (it == c.factors.end()) {
    throw Error(ErrorCode::NotAFactor,
                std::string(u) + " is not a factor of the fixed point");
  }
  const FactorInfo& info = it->second;
  if (std::popcount(info.phase_mask) != 1) return std::nullopt;

  const uint32_t phase = static_cast<uint32_t>(std::countr_zero(info.phase_mask));
  Interpretation interp =
      derive_interpretation(w, u, info.first_positions[0], phase);
  if (info.first_positions.size() >= 2) {
    Interpretation second =
        derive_interpretation(w, u, info.first_positions[1], phase);
    if (!(second == interp)) {
      throw Error(ErrorCode::InvariantViolation,
                  "occurrences of " + std::string(u) +
                      " disagree on their interpretation");
    }
  }
  return interp;
}

Interpretation interpret(InfiniteWord& w, std::string_view u) {
  if (u.size() < w.sync_length()) {
    throw Error(ErrorCode::TooShort,
                "interpretation needs length >= " +
                    std::to_string(w.sync_length()) + ", got " +
                    std::to_string(u.size()));
  }
  auto interp = try_interpret(w, u);
  if (!interp) {
    throw Error(ErrorCode::NotCircular,
                std::string(u) + " occurs at several phases despite its "
                                 "length reaching the synchronization length");
  }
  return *interp;
}

std::vector<ChainLink> ancestor_chain_links(InfiniteWord& w,
                                            std::string_view u) {
  const uint32_t sync = w.sync_length();
  if (u.size() < sync) {
    throw Error(ErrorCode::TooShort,
                "ancestor chains start at length >= " + std::to_string(sync));
  }
  std::vector<ChainLink> links;
  std::string cur(u);
  while (cur.size() >= sync) {
    Interpretation interp = interpret(w, cur);
    std::string next = interp.ancestor;
    links.push_back(ChainLink{std::move(cur), std::move(interp)});
    cur = std::move(next);
  }
  return links;
}

std::vector<std::string> ancestor_chain(InfiniteWord& w, std::string_view u) {
  std::vector<ChainLink> links = ancestor_chain_links(w, u);
  std::vector<std::string> chain;
  chain.reserve(links.size() + 1);
  for (auto& link : links) chain.push_back(link.word);
  chain.push_back(links.back().interp.ancestor);
  return chain;
}

const char* word_class_name(WordClass c) {
  switch (c) {
    case WordClass::Bad: return "bad";
    case WordClass::Narrow: return "narrow";
    case WordClass::Wide: return "wide";
    case WordClass::Neutral: return "neutral";
  }
  return "?";
}

Classified classify_with_terminal(InfiniteWord& w, std::string_view u) {
  const uint32_t sync = w.sync_length();
  const uint32_t l = w.block_length();
  const bool self_bad = pattern_sets(w, u).bad();

  if (u.size() < sync) {
    return Classified{std::string(u),
                      self_bad ? WordClass::Bad : WordClass::Neutral};
  }

  std::vector<ChainLink> links = ancestor_chain_links(w, u);
  Classified out;
  out.terminal = links.back().interp.ancestor;
  if (self_bad) {
    out.word_class = WordClass::Bad;
    return out;
  }

  // Chain elements after u: links[k].word for k >= 1, then the terminal.
  auto element = [&](size_t k) -> const std::string& {
    return k < links.size() ? links[k].word : out.terminal;
  };
  size_t first_bad = 0;
  bool found = false;
  for (size_t k = 1; k <= links.size(); ++k) {
    if (pattern_sets(w, element(k)).bad()) {
      first_bad = k;
      found = true;
      break;
    }
  }
  if (!found) {
    out.word_class = WordClass::Neutral;
    return out;
  }

  const Interpretation& cut = links[first_bad - 1].interp;
  const uint32_t narrow_side = cut.left_cut + 1;
  const uint32_t wide_side = l - cut.right_cut;
  if (narrow_side > wide_side) {
    out.word_class = WordClass::Narrow;
  } else if (narrow_side < wide_side) {
    out.word_class = WordClass::Wide;
  } else {
    throw Error(ErrorCode::DegenerateBoundary,
                "word above the first bad ancestor has i+1 = l-j: " +
                    links[first_bad - 1].word);
  }
  return out;
}

WordClass classify(InfiniteWord& w, std::string_view u) {
  return classify_with_terminal(w, u).word_class;
}

std::string special_chain_terminal(InfiniteWord& w, std::string_view v) {
  std::string cur(v);
  for (int steps = 0; steps < 256; ++steps) {
    auto interp = try_interpret(w, cur);
    if (!interp) return cur;
    if (!is_special(w, interp->ancestor)) {
      throw Error(ErrorCode::InvariantViolation,
                  "ancestor " + interp->ancestor + " of the special word " +
                      cur + " is not special");
    }
    cur = interp->ancestor;
  }
  throw Error(ErrorCode::StabilizationCapExceeded,
              "special chain did not terminate");
}

std::map<std::pair<std::string, WordClass>, uint64_t> classified_counts(
    InfiniteWord& w, uint32_t n) {
  std::map<std::pair<std::string, WordClass>, uint64_t> counts;
  for (const std::string& u : w.factors(n)) {
    Classified c = classify_with_terminal(w, u);
    counts[{c.terminal, c.word_class}] += 1;
  }
  return counts;
}

const char* count_kind_name(CountKind k) {
  switch (k) {
    case CountKind::Bad: return "bad";
    case CountKind::Narrow: return "narrow";
    case CountKind::Wide: return "wide";
    case CountKind::Any: return "any";
    case CountKind::Special: return "special";
  }
  return "?";
}

CountKind count_kind_from_name(std::string_view name) {
  if (name == "bad") return CountKind::Bad;
  if (name == "narrow") return CountKind::Narrow;
  if (name == "wide") return CountKind::Wide;
  if (name == "any") return CountKind::Any;
  if (name == "special") return CountKind::Special;
  throw Error(ErrorCode::MalformedSpec, "unknown count kind: " + std::string(name));
}

namespace {

CountKind kind_of_class(WordClass c) {
  switch (c) {
    case WordClass::Bad: return CountKind::Bad;
    case WordClass::Narrow: return CountKind::Narrow;
    case WordClass::Wide: return CountKind::Wide;
    case WordClass::Neutral: return CountKind::Any;  // no dedicated row
  }
  return CountKind::Any;
}

}  // namespace

SeedTables build_seed_tables(InfiniteWord& w) {
  SeedTables tables;
  tables.sync_length = w.sync_length();
  const uint32_t l = w.block_length();
  tables.base_threshold = w.limits().base_threshold_override
                              ? w.limits().base_threshold_override
                              : l * (tables.sync_length + 2);
  const uint32_t sync = tables.sync_length;
  const uint32_t threshold = tables.base_threshold;

  // Chain terminals and classes of every factor with length in
  // [sync, threshold]; the terminal set is the seed set A.
  std::set<std::string> seeds;
  for (uint32_t n = sync; n <= threshold; ++n) {
    for (const auto& [key, count] : classified_counts(w, n)) {
      const auto& [terminal, word_class] = key;
      seeds.insert(terminal);
      if (word_class != WordClass::Neutral) {
        tables.base_counts[{terminal, kind_of_class(word_class), n}] += count;
      }
      tables.base_counts[{terminal, CountKind::Any, n}] += count;
    }
  }

  // Below the synchronization length every factor is its own terminal;
  // only seed words get rows.
  for (uint32_t n = 1; n < sync; ++n) {
    for (const std::string& u : w.factors(n)) {
      if (!seeds.count(u)) continue;
      if (pattern_sets(w, u).bad()) {
        tables.base_counts[{u, CountKind::Bad, n}] = 1;
      }
      tables.base_counts[{u, CountKind::Any, n}] = 1;
    }
  }

  for (const std::string& a : seeds) {
    const PatternSets& sets = pattern_sets(w, a);
    if (sets.bad()) {
      tables.a1[a] = SeedStats{sets.m(), sets.n()};
    } else {
      tables.a2[a] = sets.m();
    }
  }

  // Special side: continued chains; the special seed set B collects the
  // terminals of special words long enough to have a proper chain.
  std::map<std::string, std::string> terminal_of;
  for (uint32_t n = 1; n <= threshold; ++n) {
    for (const std::string& v : w.factors(n)) {
      if (!is_special(w, v)) continue;
      std::string terminal = special_chain_terminal(w, v);
      if (n >= sync) tables.b[terminal];  // key collection, stats below
      terminal_of.emplace(v, std::move(terminal));
    }
  }
  for (const auto& [v, terminal] : terminal_of) {
    if (!tables.b.count(terminal)) continue;
    tables.base_counts[{terminal, CountKind::Special,
                        static_cast<uint32_t>(v.size())}] += 1;
  }
  for (auto& [b_word, stats] : tables.b) {
    stats = special_stats(w, b_word);
  }

  return tables;
}

nlohmann::json seed_tables_to_json(const SeedTables& t) {
  nlohmann::json j;
  j["sync_length"] = t.sync_length;
  j["base_threshold"] = t.base_threshold;
  j["a1"] = nlohmann::json::object();
  for (const auto& [word, stats] : t.a1) {
    j["a1"][word] = {{"m", stats.m}, {"n", stats.n}};
  }
  j["a2"] = nlohmann::json::object();
  for (const auto& [word, m] : t.a2) j["a2"][word] = m;
  j["b"] = nlohmann::json::object();
  for (const auto& [word, stats] : t.b) {
    j["b"][word] = {{"k", stats.k}, {"t", stats.t}, {"r", stats.r}};
  }
  j["base_counts"] = nlohmann::json::object();
  for (const auto& [key, count] : t.base_counts) {
    const auto& [seed, kind, n] = key;
    j["base_counts"][seed + "|" + count_kind_name(kind) + "|" +
                     std::to_string(n)] = count;
  }
  return j;
}

SeedTables seed_tables_from_json(const nlohmann::json& j) {
  SeedTables t;
  t.sync_length = j.at("sync_length").get<uint32_t>();
  t.base_threshold = j.at("base_threshold").get<uint32_t>();
  for (const auto& [word, stats] : j.at("a1").items()) {
    t.a1[word] = SeedStats{stats.at("m").get<uint64_t>(),
                           stats.at("n").get<uint64_t>()};
  }
  for (const auto& [word, m] : j.at("a2").items()) {
    t.a2[word] = m.get<uint64_t>();
  }
  for (const auto& [word, stats] : j.at("b").items()) {
    t.b[word] = SpecialStats{stats.at("k").get<uint64_t>(),
                             stats.at("t").get<uint64_t>(),
                             stats.at("r").get<uint64_t>()};
  }
  for (const auto& [key, count] : j.at("base_counts").items()) {
    size_t first = key.find('|');
    size_t second = key.find('|', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw Error(ErrorCode::MalformedSpec, "bad base_counts key: " + key);
    }
    t.base_counts[{key.substr(0, first),
                   count_kind_from_name(
                       key.substr(first + 1, second - first - 1)),
                   static_cast<uint32_t>(
                       std::stoul(key.substr(second + 1)))}] =
        count.get<uint64_t>();
  }
  return t;
}

}  // namespace permc
