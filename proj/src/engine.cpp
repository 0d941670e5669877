#include "permc/engine.hpp"

#include <stdexcept>

namespace permc {

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::ArithmeticOverflow, "count exceeds 64 bits");
  }
  return out;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::ArithmeticOverflow, "count exceeds 64 bits");
  }
  return out;
}

Engine::Engine(Morphism morphism, SeedTables tables)
    : morphism_(std::move(morphism)), tables_(std::move(tables)) {
  for (const auto& [word, stats] : tables_.a1) {
    seed_ids_.emplace(word, seed_names_.size());
    seed_names_.push_back(word);
  }
  for (const auto& [word, m] : tables_.a2) {
    if (!seed_ids_.count(word)) {
      seed_ids_.emplace(word, seed_names_.size());
      seed_names_.push_back(word);
    }
  }
  for (const auto& [word, stats] : tables_.b) {
    if (!seed_ids_.count(word)) {
      seed_ids_.emplace(word, seed_names_.size());
      seed_names_.push_back(word);
    }
  }
}

uint32_t Engine::seed_id(const std::string& seed, CountKind kind) const {
  const bool known = kind == CountKind::Special
                         ? tables_.b.count(seed) > 0
                         : tables_.is_word_seed(seed);
  if (!known) {
    throw Error(ErrorCode::UnknownSeed,
                seed + " is not a seed for kind " + count_kind_name(kind));
  }
  return seed_ids_.at(seed);
}

uint64_t Engine::count(const CountQuery& q) {
  if (q.n == 0) throw std::invalid_argument("counts are defined for n >= 1");
  return evaluate(seed_id(q.seed, q.kind), q.kind, q.n);
}

uint64_t Engine::evaluate(uint32_t id, CountKind kind, uint64_t n_top) {
  struct Term {
    uint64_t weight;
    CountKind kind;
    uint64_t n;
  };
  const uint64_t l = morphism_.length();
  const std::string& seed = seed_names_[id];

  // Anchor for special seeds: exactly one length-(l^k |b|) special word per
  // chain terminal b.
  auto special_anchor = [&](uint64_t n) {
    uint64_t t = seed.size();
    while (t < n && t <= n / l) t = t * l;
    return t == n;
  };

  auto dependencies = [&](CountKind kind, uint64_t n) {
    std::vector<Term> deps;
    const uint64_t x = n / l;
    const uint64_t r = n % l;
    auto add = [&](uint64_t weight, CountKind k, uint64_t arg) {
      if (weight) deps.push_back(Term{weight, k, arg});
    };
    switch (kind) {
      case CountKind::Bad:
        if (r == 1) add(l, CountKind::Bad, x + 1);
        break;
      case CountKind::Narrow:
        if (r >= 1) {
          add(r - 1, CountKind::Narrow, x + 2);
          add(r - 1, CountKind::Bad, x + 2);
          add(l - r + 1, CountKind::Narrow, x + 1);
        } else {
          add(l - 1, CountKind::Narrow, x + 1);
          add(l - 1, CountKind::Bad, x + 1);
          add(1, CountKind::Narrow, x);
        }
        break;
      case CountKind::Wide:
        if (r >= 2) {
          add(r - 1, CountKind::Wide, x + 2);
          add(l - r + 1, CountKind::Wide, x + 1);
          add(l - r + 1, CountKind::Bad, x + 1);
        } else if (r == 1) {
          add(l, CountKind::Wide, x + 1);
        } else {
          add(l - 1, CountKind::Wide, x + 1);
          add(1, CountKind::Wide, x);
          add(1, CountKind::Bad, x);
        }
        break;
      case CountKind::Any:
        if (r >= 1) {
          add(r - 1, CountKind::Any, x + 2);
          add(l - r + 1, CountKind::Any, x + 1);
        } else {
          add(l - 1, CountKind::Any, x + 1);
          add(1, CountKind::Any, x);
        }
        break;
      case CountKind::Special:
        add(1, CountKind::Special, r > 0 ? x + 1 : x);
        break;
    }
    return deps;
  };

  std::vector<std::pair<CountKind, uint64_t>> work{{kind, n_top}};
  while (!work.empty()) {
    auto [k, n] = work.back();
    auto key = std::make_tuple(id, k, n);
    if (memo_.count(key)) {
      work.pop_back();
      continue;
    }
    if (n <= tables_.base_threshold) {
      memo_[key] = tables_.base_count(seed, k, static_cast<uint32_t>(n));
      work.pop_back();
      continue;
    }
    if (k == CountKind::Special && special_anchor(n)) {
      memo_[key] = 1;
      work.pop_back();
      continue;
    }
    std::vector<Term> deps = dependencies(k, n);
    bool ready = true;
    for (const Term& d : deps) {
      if (!memo_.count(std::make_tuple(id, d.kind, d.n))) {
        ready = false;
        work.push_back({d.kind, d.n});
      }
    }
    if (!ready) continue;
    uint64_t total = 0;
    for (const Term& d : deps) {
      total = checked_add(
          total, checked_mul(d.weight, memo_.at(std::make_tuple(id, d.kind, d.n))));
    }
    memo_[key] = total;
    work.pop_back();
  }
  return memo_.at(std::make_tuple(id, kind, n_top));
}

uint64_t Engine::sum_f(uint64_t n) {
  if (n < 2) throw std::invalid_argument("sum_f is defined for n >= 2");
  uint64_t total = 0;
  for (const auto& [word, stats] : tables_.a1) {
    uint32_t id = seed_ids_.at(word);
    uint64_t narrow = evaluate(id, CountKind::Narrow, n);
    uint64_t bad = evaluate(id, CountKind::Bad, n);
    uint64_t wide = evaluate(id, CountKind::Wide, n);
    total = checked_add(total, checked_mul(narrow, stats.m + stats.n));
    total = checked_add(
        total, checked_mul(checked_add(bad, wide), stats.m + 2 * stats.n));
  }
  for (const auto& [word, m] : tables_.a2) {
    total = checked_add(
        total, checked_mul(evaluate(seed_ids_.at(word), CountKind::Any, n), m));
  }
  return total;
}

int Engine::delta(uint64_t n, const std::string& b) const {
  if (!tables_.b.count(b)) {
    throw Error(ErrorCode::UnknownSeed, b + " is not a special seed");
  }
  const uint64_t l = morphism_.length();
  const uint64_t target = n - 1;
  uint64_t t = b.size();
  while (t <= target / l) {
    t *= l;
    if (t == target) return 0;
  }
  return 1;
}

uint64_t Engine::sum_g(uint64_t n) {
  if (n < 2) throw std::invalid_argument("sum_g is defined for n >= 2");
  uint64_t total = 0;
  for (const auto& [word, stats] : tables_.b) {
    uint32_t id = seed_ids_.at(word);
    if (delta(n, word)) {
      uint64_t s = evaluate(id, CountKind::Special, n - 1);
      total = checked_add(total, checked_mul(s, stats.k + stats.t + stats.r));
    } else {
      total = checked_add(total, stats.k + stats.r);
    }
  }
  return total;
}

uint64_t Engine::lambda(uint64_t n) {
  if (n < 2) throw std::invalid_argument("lambda is defined for n >= 2");
  if (n <= tables_.base_threshold) {
    if (!small_lambda_) {
      throw Error(ErrorCode::UnknownSeed,
                  "no brute-force source configured for small lengths");
    }
    return small_lambda_(static_cast<uint32_t>(n));
  }
  uint64_t f = sum_f(n);
  uint64_t g = sum_g(n);
  if (g > f) {
    throw Error(ErrorCode::NegativeResult,
                "sum g exceeds sum f at n = " + std::to_string(n) +
                    " (inconsistent seed tables)");
  }
  return f - g;
}

std::vector<std::pair<uint64_t, uint64_t>> Engine::lambda_range(uint64_t lo,
                                                                uint64_t hi) {
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("lambda range needs 2 <= lo <= hi");
  }
  std::vector<std::pair<uint64_t, uint64_t>> out;
  out.reserve(hi - lo + 1);
  for (uint64_t n = lo; n <= hi; ++n) out.emplace_back(n, lambda(n));
  return out;
}

}  // namespace permc
