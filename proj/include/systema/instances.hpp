#pragma once

// Shipped instances and the two transformers.
//
// Registry names: boolean, maxplus, minplus, chain:<m>, supertropical:<base>,
// symmetrized:<base>, krasner, sign, trophf, phase, integers, naturals.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "systema/system.hpp"

namespace systema {

/// {𝟘, 𝟙} with 1 + 1 = 1.
System makeBoolean();
/// Exact rationals under (max, +); 𝟘 is -inf.
System makeMaxPlusRational();
/// Exact rationals under (min, +); 𝟘 is inf.
System makeMinPlusRational();
/// Chain {𝟘 < 0 < 1 < ... < m} under (max, truncated +).
System makeFiniteChain(std::int64_t m);

/// Supertropical system over a bipotent ordered-monoid base. Over a finite
/// chain a tangible product that overflows the top is the ghost of the top.
System supertropicalize(const System& base);
/// Pairs with componentwise addition, twist product and switch negation.
System symmetrize(const System& base);

System makeKrasner();
System makeSign();
System makeTropicalHyperfield();
System makePhase();

/// Same carrier as `base`, negation b ↦ onePrime·b, ⪯ reset to ⪯∘. Finite bases only.
System makeFuzzyNegation(const System& base, const Element& onePrime);

/// Integers with true negation (probe -3..3).
System makeIntegers();
/// Naturals with identity negation (probe 0..5).
System makeNaturals();

struct IsomorphismResult {
  bool isomorphic = false;
  std::map<Element, Element> witness;  // S1 element ↦ S2 element
};
/// Bijection preserving add, mul, negate and tangibility; both carriers ≤ 12 elements.
IsomorphismResult isomorphicFinite(const System& s1, const System& s2);

/// Resolves a registry name. Throws PreconditionError listing valid names.
System resolveInstance(std::string_view name);
std::string instanceNameHelp();

}  // namespace systema
