#pragma once

#include <string>
#include <string_view>

#include "permc/errors.hpp"

namespace permc {

/// A binary uniform marked morphism, given by its two blocks (the images of
/// 0 and 1). Both blocks have the same length l >= 2, the first symbols of
/// the blocks differ, the last symbols differ, and the image of 0 starts
/// with 0 so that iterating the morphism on "0" converges to a fixed point.
class Morphism {
 public:
  Morphism(std::string block0, std::string block1);

  /// Parses "block0/block1", e.g. "01/10".
  static Morphism parse(std::string_view spec);

  int length() const { return static_cast<int>(block0_.size()); }
  const std::string& block(int symbol) const {
    return symbol == 0 ? block0_ : block1_;
  }
  const std::string& block0() const { return block0_; }
  const std::string& block1() const { return block1_; }

  /// Image of a word: blocks concatenated in order of its symbols.
  std::string apply(std::string_view word) const;

  std::string text() const { return block0_ + "/" + block1_; }

  bool operator==(const Morphism& other) const = default;

 private:
  std::string block0_;
  std::string block1_;
};

/// Membership in the class of morphisms the counting machinery supports.
/// FormA blocks look like 0 1^n 0 x 1 / 1 0^m 1 y 0 where the marker runs
/// 1^n and 0^m each occur exactly once across the two blocks and the blocks
/// do not end with 1^(n-1) / 0^(m-1). FormB blocks are 0 1^(l-1) / 1 0^(l-1).
struct QMembership {
  enum class Form { FormA, FormB, NotInQ };

  Form form = Form::NotInQ;
  int n = 0;            // FormA/FormB marker run length
  int m = 0;            // FormA only
  std::string reason;   // first violated condition when NotInQ

  bool in_q() const { return form != Form::NotInQ; }
};

QMembership classify_q(const Morphism& m);

}  // namespace permc
