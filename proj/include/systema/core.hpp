#pragma once

// Derived elements, predicates, and the axiom audit for triples and systems.
//
// Everything here quantifies over S.domain(): the whole carrier for finite
// instances, the probe set otherwise. Results computed from a probe set carry
// `sampled = true`; a sampled pass is evidence, not a proof.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "systema/system.hpp"

namespace systema {

Element quasiZero(const SystemDescriptor& S, const Element& b);
bool isQuasiZero(const SystemDescriptor& S, const Element& b);

struct SpecialElements {
  Element e;       // 𝟙∘
  Element ePrime;  // e + 𝟙
  Element eCirc;   // e + e
};
/// Throws PreconditionError for non-unital systems.
SpecialElements specialElements(const SystemDescriptor& S);

struct NegationKindResult {
  NegationKind kind;
  std::vector<Element> inspected;
  bool sampled = false;
};
/// Throws PreconditionError when the domain has no tangibles.
NegationKindResult negationKind(const SystemDescriptor& S);

struct Characteristic {
  std::optional<std::uint64_t> value;  // nullopt: exceeds bound
  bool sampled = false;
  std::string str() const;
};
Characteristic characteristic(const SystemDescriptor& S, std::size_t bound);
Characteristic characteristic(const SystemDescriptor& S);

/// Least t ≤ bound such that b is a sum of t tangibles (0 for 𝟘); nullopt when
/// no decomposition is found within the bound.
std::optional<std::size_t> heightOf(const SystemDescriptor& S, const Element& b, std::size_t bound);
std::optional<std::size_t> heightOf(const SystemDescriptor& S, const Element& b);

/// A universally quantified check with its first counterexample.
struct Verdict {
  bool holds = true;
  std::vector<Element> counterexample;
  bool sampled = false;
};

Verdict checkMetaTangible(const SystemDescriptor& S);
Verdict checkMinusBipotent(const SystemDescriptor& S);
bool isMetaTangible(const SystemDescriptor& S);
bool isMinusBipotent(const SystemDescriptor& S);

/// a ⪯ b + c implies b ⪯ a (-) c, for tangible a, b and every c.
Verdict checkReversibility(const SystemDescriptor& S);

/// For tangible a, b: a = (-)b, or a + b = a, or a∘ + b = b.
/// nullopt when S is not meta-tangible.
std::optional<Verdict> tangibleSumTrichotomy(const SystemDescriptor& S);

/// Three conditions that coincide on unital meta-tangible systems.
struct HeightTwoEquivalence {
  bool tangiblesAndQuasiTangiblesCover = false;  // 𝒯 ∪ 𝒯∘ ∪ {𝟘} = 𝒜
  bool metaTangibleHeightTwo = false;            // meta-tangible, every height ≤ 2
  bool metaTangibleUnitShape = false;            // meta-tangible, e′ ∈ {𝟙, e}
  bool sampled = false;
  bool agree() const {
    return tangiblesAndQuasiTangiblesCover == metaTangibleHeightTwo &&
           metaTangibleHeightTwo == metaTangibleUnitShape;
  }
};
HeightTwoEquivalence heightTwoEquivalence(const SystemDescriptor& S);

/// "For every tangible a there is exactly one tangible b with a + b quasi-zero."
Verdict checkUniquelyNegated(const SystemDescriptor& S);

enum class AxiomGroup { Module, Negation, Triple, Surpassing, Interpretation };
std::string_view toString(AxiomGroup group);

struct AxiomCheck {
  std::string name;
  AxiomGroup group = AxiomGroup::Module;
  bool passed = true;
  std::vector<Element> counterexample;
  std::uint64_t tuplesChecked = 0;
};

struct AxiomReport {
  std::string system;
  bool sampled = false;
  std::size_t domainSize = 0;
  std::vector<AxiomCheck> checks;

  bool isTrivial = false;
  bool isTModule = false;
  bool isPseudoTriple = false;  // triple axioms except generation
  bool isTriple = false;
  bool isSystem = false;
  bool isMetaTangible = false;
  bool isMinusBipotent = false;
  std::optional<bool> isReversible;
  std::optional<bool> isUniquelyNegated;
  std::optional<NegationKind> negationKind;
  Characteristic characteristic;
  std::optional<std::size_t> maxHeightObserved;  // nullopt: some element exceeded the height bound

  const AxiomCheck* find(std::string_view name) const;
  bool allPassed() const;
  /// "trivial", "system", "triple", "pseudo-triple", "T-module" or "none".
  std::string classification() const;
};

AxiomReport auditAxioms(const SystemDescriptor& S);

/// Names of the audited axioms, in report order.
std::vector<std::string> axiomNames();

/// Re-evaluates the named axiom on `tuple`; true when it holds there.
/// Throws PreconditionError for an unknown name or wrong tuple length.
bool recheck(const SystemDescriptor& S, std::string_view axiom, const std::vector<Element>& tuple);

}  // namespace systema
