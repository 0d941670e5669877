#include "permc/pattern.hpp"

#include <algorithm>
#include <cstdlib>

namespace permc {

std::string Pattern::to_string() const {
  std::string out;
  for (size_t i = 0; i < ranks_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ranks_[i]);
  }
  return out;
}

Pattern Pattern::from_string(std::string_view text) {
  std::vector<uint16_t> ranks;
  if (text.find(' ') == std::string_view::npos) {
    for (char c : text) ranks.push_back(static_cast<uint16_t>(c - '0'));
  } else {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t end = text.find(' ', pos);
      if (end == std::string_view::npos) end = text.size();
      ranks.push_back(static_cast<uint16_t>(
          std::atoi(std::string(text.substr(pos, end - pos)).c_str())));
      pos = end + 1;
    }
  }
  return Pattern(std::move(ranks));
}

bool equivalent(const Pattern& x, const Pattern& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "equivalence is defined for patterns of equal length");
  }
  const size_t k = x.size();
  if (k < 2) return false;
  auto less_x = [&](size_t i, size_t j) { return x[i] < x[j]; };
  auto less_y = [&](size_t i, size_t j) { return y[i] < y[j]; };
  if (less_x(0, k - 1) == less_y(0, k - 1)) return false;
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (less_x(i, j) != less_y(i, j)) return false;
    }
  }
  return true;
}

bool can_have_equivalent(const Pattern& x) {
  if (x.size() < 2) return false;
  int a = x[0];
  int b = x[x.size() - 1];
  return std::abs(a - b) == 1;
}

Pattern extreme_swapped(const Pattern& x) {
  std::vector<uint16_t> ranks = x.ranks();
  std::swap(ranks.front(), ranks.back());
  return Pattern(std::move(ranks));
}

std::set<Pattern> PatternSets::all() const {
  std::set<Pattern> out = m_set;
  for (const auto& [a, b] : n_pairs) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

PatternSets split_pattern_sets(const std::set<Pattern>& generated) {
  PatternSets sets;
  std::set<Pattern> unpaired = generated;
  while (!unpaired.empty()) {
    Pattern x = *unpaired.begin();
    unpaired.erase(unpaired.begin());
    const Pattern* partner = nullptr;
    for (const Pattern& y : unpaired) {
      if (equivalent(x, y)) {
        partner = &y;
        break;
      }
    }
    if (partner) {
      Pattern y = *partner;
      unpaired.erase(y);
      sets.n_pairs.insert(x < y ? std::make_pair(x, y)
                                : std::make_pair(y, x));
    } else {
      sets.m_set.insert(x);
    }
  }
  return sets;
}

}  // namespace permc
