#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permc/ancestry.hpp"
#include "permc/word.hpp"

namespace permc {

struct PropertyResult {
  std::string name;
  bool pass = true;
  uint64_t checks = 0;
  std::string detail;  // first counterexample when failing
};

struct VerifyOptions {
  uint32_t window = 0;             // max swept factor length; 0 = 2 * base_threshold
  uint64_t min_order_pairs = 10000;  // per order-law property
  uint32_t conservation_margin = 8;  // engine vs oracle lambda past base_threshold
};

/// Runs the whole invariant battery: order laws, equivalence criterion,
/// ancestry and class laws, special-word statistics laws, recurrence/base
/// agreement, and engine/oracle conservation.
std::vector<PropertyResult> run_verification(InfiniteWord& w,
                                             const SeedTables& tables,
                                             VerifyOptions options = {});

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace permc
