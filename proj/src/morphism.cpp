#include "permc/morphism.hpp"

#include <algorithm>

namespace permc {

namespace {

bool is_binary(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

size_t count_occurrences(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return 0;
  size_t count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

}  // namespace

Morphism::Morphism(std::string block0, std::string block1)
    : block0_(std::move(block0)), block1_(std::move(block1)) {
  if (!is_binary(block0_) || !is_binary(block1_)) {
    throw Error(ErrorCode::MalformedSpec, "blocks must be over {0,1}");
  }
  if (block0_.size() != block1_.size()) {
    throw Error(ErrorCode::MalformedSpec, "blocks must have equal length");
  }
  if (block0_.size() < 2) {
    throw Error(ErrorCode::MalformedSpec, "block length must be at least 2");
  }
  if (block0_.front() != '0') {
    throw Error(ErrorCode::NoFixedPoint, "image of 0 must start with 0");
  }
  if (block0_.front() == block1_.front() || block0_.back() == block1_.back()) {
    throw Error(ErrorCode::NotMarked,
                "blocks must differ in first and in last symbols");
  }
}

Morphism Morphism::parse(std::string_view spec) {
  size_t slash = spec.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::MalformedSpec,
                "expected \"<block0>/<block1>\", e.g. \"01/10\"");
  }
  return Morphism(std::string(spec.substr(0, slash)),
                  std::string(spec.substr(slash + 1)));
}

std::string Morphism::apply(std::string_view word) const {
  std::string out;
  out.reserve(word.size() * block0_.size());
  for (char c : word) out += block(c - '0');
  return out;
}

QMembership classify_q(const Morphism& m) {
  const std::string& x = m.block0();
  const std::string& y = m.block1();
  const int l = m.length();

  // FormB: 0 1^(l-1) / 1 0^(l-1).
  if (x == "0" + std::string(l - 1, '1') && y == "1" + std::string(l - 1, '0')) {
    QMembership q;
    q.form = QMembership::Form::FormB;
    q.n = l - 1;
    return q;
  }

  auto fail = [](std::string reason) {
    QMembership q;
    q.reason = std::move(reason);
    return q;
  };

  // FormA: x = 0 1^n 0 ... 1, y = 1 0^m 1 ... 0.
  int n = 0;
  while (1 + n < l && x[1 + n] == '1') ++n;
  if (n == 0) return fail("block0 is not of the form 0 1^n 0 x 1 (no 1-run)");
  if (1 + n >= l || x[1 + n] != '0') {
    return fail("block0 is not of the form 0 1^n 0 x 1 (1-run not closed by 0)");
  }
  if (x.back() != '1') return fail("block0 does not end with 1");

  int mm = 0;
  while (1 + mm < l && y[1 + mm] == '0') ++mm;
  if (mm == 0) return fail("block1 is not of the form 1 0^m 1 y 0 (no 0-run)");
  if (1 + mm >= l || y[1 + mm] != '1') {
    return fail("block1 is not of the form 1 0^m 1 y 0 (0-run not closed by 1)");
  }
  if (y.back() != '0') return fail("block1 does not end with 0");

  const std::string ones(n, '1');
  const std::string zeros(mm, '0');
  if (count_occurrences(x, ones) + count_occurrences(y, ones) != 1) {
    return fail("marker 1^" + std::to_string(n) +
                " must occur exactly once across the blocks");
  }
  if (count_occurrences(x, zeros) + count_occurrences(y, zeros) != 1) {
    return fail("marker 0^" + std::to_string(mm) +
                " must occur exactly once across the blocks");
  }
  if (n >= 2 && x.ends_with(std::string(n - 1, '1'))) {
    return fail("block0 must not end with 1^" + std::to_string(n - 1));
  }
  if (mm >= 2 && y.ends_with(std::string(mm - 1, '0'))) {
    return fail("block1 must not end with 0^" + std::to_string(mm - 1));
  }

  QMembership q;
  q.form = QMembership::Form::FormA;
  q.n = n;
  q.m = mm;
  return q;
}

}  // namespace permc
