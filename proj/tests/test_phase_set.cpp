#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support.hpp"
#include "systema/phase_set.hpp"

using systema::PhaseSet;
using systema::Rational;

namespace {

Rational turns(std::int64_t n, std::int64_t d) { return Rational(n, d); }

// Point-pair hypersum written out from the convention, using only constructors.
PhaseSet pointSumOracle(const Rational& x, const Rational& y) {
  if (x == y) return PhaseSet::point(x);
  const Rational gap = (y - x).fractionalPart();
  if (gap == Rational(1, 2)) return PhaseSet::zero().unite(PhaseSet::point(x)).unite(PhaseSet::point(y));
  return gap < Rational(1, 2) ? PhaseSet::openArc(x, y) : PhaseSet::openArc(y, x);
}

Rational randomAngle(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 7);
  return Rational(num(rng), 8);
}

PhaseSet randomPoints(std::mt19937_64& rng, int count) {
  PhaseSet s;
  for (int i = 0; i < count; ++i) s = s.unite(PhaseSet::point(randomAngle(rng)));
  return s;
}

PhaseSet randomSet(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  PhaseSet s;
  for (int i = 0; i < 2; ++i) {
    switch (kind(rng)) {
      case 0: s = s.unite(PhaseSet::zero()); break;
      case 1:
      case 2: s = s.unite(PhaseSet::point(randomAngle(rng))); break;
      case 3: {
        const Rational a = randomAngle(rng);
        s = s.unite(PhaseSet::openArc(a, a + Rational(1, 8)));
        break;
      }
      default: break;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("phase canonical forms") {
  CHECK(PhaseSet::point(turns(5, 4)) == PhaseSet::point(turns(1, 4)));
  CHECK(PhaseSet::point(turns(-1, 4)) == PhaseSet::point(turns(3, 4)));
  // Adjacent arcs joined through their shared endpoint become one arc.
  const PhaseSet joined = PhaseSet::openArc(turns(0, 1), turns(1, 4))
                              .unite(PhaseSet::point(turns(1, 4)))
                              .unite(PhaseSet::openArc(turns(1, 4), turns(1, 2)));
  CHECK(joined == PhaseSet::openArc(turns(0, 1), turns(1, 2)));
  CHECK(PhaseSet::openArc(turns(0, 1), turns(1, 2)).unite(PhaseSet::point(turns(1, 8))) ==
        PhaseSet::openArc(turns(0, 1), turns(1, 2)));
  CHECK(PhaseSet::openArc(turns(0, 1), turns(0, 1)).unite(PhaseSet::point(turns(0, 1))) == PhaseSet::circle(false));
  CHECK(PhaseSet::point(turns(1, 3)).isSinglePoint());
  CHECK_FALSE(PhaseSet::zero().isSinglePoint());
  CHECK(PhaseSet().empty());
}

TEST_CASE("phase printing round-trips") {
  const std::vector<PhaseSet> samples = {
      PhaseSet::zero(),
      PhaseSet::point(turns(1, 8)),
      PhaseSet::openArc(turns(0, 1), turns(1, 4)),
      PhaseSet::circle(true),
      PhaseSet::circle(false),
      PhaseSet::zero().unite(PhaseSet::point(turns(1, 8))).unite(PhaseSet::openArc(turns(1, 2), turns(3, 4))),
      PhaseSet::openArc(turns(3, 4), turns(1, 4)),
  };
  for (const auto& s : samples) CHECK(PhaseSet::parse(s.str()) == s);
  CHECK(PhaseSet::point(turns(1, 4)).str() == "@1/4");
  CHECK(PhaseSet::zero().str() == "0");
  CHECK_THROWS_AS(PhaseSet::parse("{1/4}"), std::invalid_argument);
  CHECK_THROWS_AS(PhaseSet::parse("(0,1/4"), std::invalid_argument);
}

TEST_CASE("phase hypersums of points follow the convention") {
  CHECK(PhaseSet::point(0).hyperSum(PhaseSet::point(turns(1, 4))) == PhaseSet::openArc(0, turns(1, 4)));
  CHECK(PhaseSet::point(turns(1, 4)).hyperSum(PhaseSet::point(0)) == PhaseSet::openArc(0, turns(1, 4)));
  CHECK(PhaseSet::point(turns(1, 8)).hyperSum(PhaseSet::point(turns(1, 8))) == PhaseSet::point(turns(1, 8)));
  CHECK(PhaseSet::point(0).hyperSum(PhaseSet::point(turns(1, 2))) ==
        PhaseSet::zero().unite(PhaseSet::point(0)).unite(PhaseSet::point(turns(1, 2))));
  CHECK(PhaseSet::zero().hyperSum(PhaseSet::point(turns(1, 3))) == PhaseSet::point(turns(1, 3)));
  // Each θ in (0, 1/4) meets 1/2 along (θ, 1/2); the union is (0, 1/2).
  CHECK(PhaseSet::openArc(0, turns(1, 4)).hyperSum(PhaseSet::point(turns(1, 2))) == PhaseSet::openArc(0, turns(1, 2)));
}

TEST_CASE("phase set hypersum is the union of pairwise point sums") {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const PhaseSet a = randomPoints(rng, 1 + trial % 3);
    const PhaseSet b = randomPoints(rng, 1 + trial % 2);
    PhaseSet expected;
    for (const auto& x : a.breaks())
      for (const auto& y : b.breaks()) expected = expected.unite(pointSumOracle(x.angle, y.angle));
    CHECK(a.hyperSum(b) == expected);
  }
}

TEST_CASE("phase set operations: associativity, commutativity, negation, inclusion") {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    const PhaseSet a = randomSet(rng), b = randomSet(rng), c = randomSet(rng);
    if (a.empty() || b.empty() || c.empty()) continue;
    CHECK(a.hyperSum(b) == b.hyperSum(a));
    CHECK(a.hyperSum(b).hyperSum(c) == a.hyperSum(b.hyperSum(c)));
    CHECK(a.negate().negate() == a);
    CHECK(a.hyperSum(b).negate() == a.negate().hyperSum(b.negate()));
    CHECK(a.subsetOf(a.unite(b)));
    CHECK(a.product(b) == b.product(a));
    if (a.subsetOf(b)) CHECK(a.hyperSum(c).subsetOf(b.hyperSum(c)));
  }
}
