#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "permc/ancestry.hpp"
#include "permc/word.hpp"

namespace permc {

/// Ground truth at one length, from exhaustive window enumeration over a
/// stabilized prefix. lambda is the number of distinct patterns; f groups
/// them by factor; g(v) counts the patterns common to v0 and v1 for the
/// special words v of length n-1. lambda = sum f - sum g is checked
/// internally on every report.
struct OracleReport {
  uint32_t n = 0;
  uint64_t lambda = 0;
  std::map<std::string, uint64_t> per_factor_f;
  std::map<std::string, uint64_t> per_special_g;
  uint32_t stabilized_at_depth = 0;
  bool q_member = false;  // reports for morphisms outside the supported
                          // class carry unverified assumptions

  uint64_t sum_f() const;
  uint64_t sum_g() const;
};

class Oracle {
 public:
  explicit Oracle(InfiniteWord& w);

  const OracleReport& lambda_bruteforce(uint32_t n);

  /// Chain terminal and class of every factor of length n, by enumeration.
  std::map<std::pair<std::string, WordClass>, uint64_t>
  classified_counts_bruteforce(uint32_t n);

 private:
  InfiniteWord& w_;
  bool q_member_;
  std::map<uint32_t, OracleReport> cache_;
};

nlohmann::json oracle_report_to_json(const OracleReport& r);

}  // namespace permc
