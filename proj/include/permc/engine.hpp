#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "permc/ancestry.hpp"
#include "permc/morphism.hpp"

namespace permc {

struct CountQuery {
  std::string seed;
  CountKind kind = CountKind::Any;
  uint64_t n = 0;
};

/// Evaluates the counting recurrences on top of the seed tables and combines
/// them into lambda(n). Lengths up to base_threshold are answered from the
/// brute-force tables (and lambda itself from the oracle); above, the
/// recurrences take over with memoized, overflow-checked arithmetic.
class Engine {
 public:
  Engine(Morphism morphism, SeedTables tables);

  /// Source for lambda(n) at n <= base_threshold (normally the oracle).
  void set_small_lambda(std::function<uint64_t(uint32_t)> fn) {
    small_lambda_ = std::move(fn);
  }

  const SeedTables& tables() const { return tables_; }
  const Morphism& morphism() const { return morphism_; }

  uint64_t count(const CountQuery& q);

  /// Total patterns generated by length-n factors, counted with
  /// multiplicity per factor (no cross-factor dedup).
  uint64_t sum_f(uint64_t n);

  /// 0 iff n = l^s |b| + 1 for some positive s.
  int delta(uint64_t n, const std::string& b) const;

  /// Total patterns shared between the two extensions of special words of
  /// length n-1 (the cross-factor dedup correction).
  uint64_t sum_g(uint64_t n);

  uint64_t lambda(uint64_t n);
  std::vector<std::pair<uint64_t, uint64_t>> lambda_range(uint64_t lo,
                                                          uint64_t hi);

 private:
  uint64_t evaluate(uint32_t seed_id, CountKind kind, uint64_t n);
  uint32_t seed_id(const std::string& seed, CountKind kind) const;

  Morphism morphism_;
  SeedTables tables_;
  std::vector<std::string> seed_names_;
  std::map<std::string, uint32_t> seed_ids_;
  std::map<std::tuple<uint32_t, CountKind, uint64_t>, uint64_t> memo_;
  std::function<uint64_t(uint32_t)> small_lambda_;
};

uint64_t checked_add(uint64_t a, uint64_t b);
uint64_t checked_mul(uint64_t a, uint64_t b);

}  // namespace permc
