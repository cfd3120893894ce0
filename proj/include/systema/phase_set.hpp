#pragma once

// Subsets of the phase hyperfield {0} ∪ S¹, with angles measured in turns.
//
// A set is a finite union of points and open arcs, optionally together with
// 0. The canonical form is a sorted list of non-redundant "breaks": at each
// break angle we record whether the angle itself is in the set and whether
// the open interval up to the next break is. Breaks whose point flag equals
// both neighbouring interval flags are dropped, so two equal sets always
// have identical representations.
//
// Hyperaddition follows the usual phase hyperfield: x ⊞ x = {x},
// x ⊞ (-x) = {0, x, -x}, and otherwise the open shorter arc between x and y.
// For sets this is the union of pairwise hypersums, which equals the phases
// of the relative interior of the cone spanned by the summands.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "systema/rational.hpp"

namespace systema {

class PhaseSet {
 public:
  struct Break {
    Rational angle;  // in [0, 1)
    bool point = false;
    bool after = false;
    auto operator<=>(const Break&) const = default;
  };

  /// The empty set.
  PhaseSet() = default;

  static PhaseSet zero();
  static PhaseSet point(const Rational& angle);
  /// Open arc running counter-clockwise from `from` to `to`; from == to is the circle minus that point.
  static PhaseSet openArc(const Rational& from, const Rational& to);
  static PhaseSet circle(bool withZero);

  bool containsZero() const { return zero_; }
  bool empty() const { return !zero_ && !full_ && breaks_.empty(); }
  bool isSinglePoint() const;
  bool contains(const Rational& angle) const;
  const std::vector<Break>& breaks() const { return breaks_; }

  PhaseSet unite(const PhaseSet& other) const;
  PhaseSet hyperSum(const PhaseSet& other) const;
  PhaseSet product(const PhaseSet& other) const;
  PhaseSet rotate(const Rational& turns) const;
  PhaseSet negate() const;
  bool subsetOf(const PhaseSet& other) const;

  /// "0", "@1/4", or "{0;@1/8;(0,1/4);S1}" style listing of components.
  std::string str() const;
  static PhaseSet parse(std::string_view text);

  auto operator<=>(const PhaseSet&) const = default;

 private:
  struct Piece {
    Rational from;  // point when length == 0
    Rational length;
    bool isPoint() const { return length.isZero(); }
  };

  bool intervalAfter(const Rational& angle) const;
  std::vector<Piece> convexPieces() const;
  static PhaseSet coneInterior(const std::vector<Rational>& directions);
  static PhaseSet fromPieces(const std::vector<Piece>& pieces, bool withZero);

  template <class MemberFn, class AfterFn>
  static PhaseSet build(std::vector<Rational> critical, MemberFn member, AfterFn after, bool uniformFull);

  bool zero_ = false;
  bool full_ = false;  // only meaningful when breaks_ is empty
  std::vector<Break> breaks_;
};

}  // namespace systema
