#include "permc/oracle.hpp"

#include <set>
#include <stdexcept>

namespace permc {

namespace {

uint64_t sum_values(const std::map<std::string, uint64_t>& m) {
  uint64_t total = 0;
  for (const auto& [key, value] : m) total += value;
  return total;
}

}  // namespace

uint64_t OracleReport::sum_f() const { return sum_values(per_factor_f); }
uint64_t OracleReport::sum_g() const { return sum_values(per_special_g); }

Oracle::Oracle(InfiniteWord& w)
    : w_(w), q_member_(classify_q(w.morphism()).in_q()) {}

const OracleReport& Oracle::lambda_bruteforce(uint32_t n) {
  if (n < 2) throw std::invalid_argument("lambda is defined for n >= 2");
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  uint32_t depth = w_.census(n).depth;
  PatternCensus prev = w_.scan_patterns(n, depth, UINT32_MAX);
  while (true) {
    if (w_.depth_size(depth + 1) > w_.limits().max_survey) {
      throw Error(ErrorCode::StabilizationCapExceeded,
                  "pattern enumeration for length " + std::to_string(n) +
                      " did not stabilize within the survey cap");
    }
    PatternCensus cur = w_.scan_patterns(n, depth + 1, UINT32_MAX);
    if (prev.by_factor == cur.by_factor) break;
    prev = std::move(cur);
    ++depth;
  }

  OracleReport report;
  report.n = n;
  report.stabilized_at_depth = depth + 1;
  report.q_member = q_member_;

  std::set<Pattern> distinct;
  std::map<std::string, std::set<Pattern>> generated;
  for (const auto& [factor, sets] : prev.by_factor) {
    std::set<Pattern> all = sets.all();
    report.per_factor_f[factor] = all.size();
    distinct.insert(all.begin(), all.end());
    generated.emplace(factor, std::move(all));
  }
  report.lambda = distinct.size();

  for (const auto& [factor, patterns] : generated) {
    if (factor.back() != '0') continue;
    std::string sibling = factor;
    sibling.back() = '1';
    auto sib = generated.find(sibling);
    if (sib == generated.end()) continue;
    uint64_t common = 0;
    for (const Pattern& p : patterns) common += sib->second.count(p);
    report.per_special_g[factor.substr(0, factor.size() - 1)] = common;
  }

  if (report.lambda + report.sum_g() != report.sum_f()) {
    throw Error(ErrorCode::InvariantViolation,
                "oracle identity lambda = sum f - sum g failed at n = " +
                    std::to_string(n));
  }
  return cache_.emplace(n, std::move(report)).first->second;
}

std::map<std::pair<std::string, WordClass>, uint64_t>
Oracle::classified_counts_bruteforce(uint32_t n) {
  return classified_counts(w_, n);
}

nlohmann::json oracle_report_to_json(const OracleReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["lambda"] = r.lambda;
  j["per_factor_f"] = nlohmann::json::object();
  for (const auto& [word, f] : r.per_factor_f) j["per_factor_f"][word] = f;
  j["per_special_g"] = nlohmann::json::object();
  for (const auto& [word, g] : r.per_special_g) j["per_special_g"][word] = g;
  j["stabilized_at_depth"] = r.stabilized_at_depth;
  j["q_member"] = r.q_member;
  return j;
}

}  // namespace permc
