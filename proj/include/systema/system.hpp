#pragma once

// Runtime description of a triple / system (𝒜, 𝒯, (-), ⪯).
//
// A SystemDescriptor is a bundle of pure functions over canonical Elements.
// Finite instances carry their whole carrier; infinite instances carry a
// probe set instead, and every check driven by a probe set reports itself
// as sampled.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "systema/element.hpp"

namespace systema {

enum class NegationKind { First, Second, Mixed };

std::string_view toString(NegationKind kind);

enum class Family {
  Numeric,             // Boolean, finite chains, max-plus / min-plus
  Supertropical,
  Symmetrized,
  FiniteHyperfield,    // power set of Krasner / sign
  TropicalHyperfield,
  Phase,
  Classical,
  Custom,
};

enum class Orientation { Max, Min };

// Totally ordered commutative monoid written multiplicatively; addition in
// the derived semiring picks the dominant element.
struct OrderedMonoidSpec {
  enum class Domain { Rationals, Chain };
  Domain domain = Domain::Rationals;
  std::int64_t top = 0;  // chain carrier is 0..top
  Orientation orientation = Orientation::Max;

  struct Product {
    Rational value;
    bool saturated = false;  // the chain product was clipped at top
  };
  Product product(const Rational& a, const Rational& b) const;
  /// Strict dominance: a wins over b under + (a > b for Max, a < b for Min).
  bool dominates(const Rational& a, const Rational& b) const;
  std::optional<Rational> inverse(const Rational& a) const;
};

struct SystemFlags {
  bool isTriple = false;
  bool isPseudoTripleOnly = false;
  std::optional<NegationKind> negationKindHint;
};

struct SystemDescriptor;
using System = std::shared_ptr<const SystemDescriptor>;

struct SystemDescriptor {
  using Binary = std::function<Element(const Element&, const Element&)>;
  using Unary = std::function<Element(const Element&)>;
  using Predicate = std::function<bool(const Element&)>;
  using Relation = std::function<bool(const Element&, const Element&)>;

  std::string name;
  Family family = Family::Custom;

  Element zero;
  std::optional<Element> one;

  Binary add;
  Binary mul;
  Unary negate;
  Predicate isTangible;
  /// preceq(x, y) is x ⪯ y, the surpassing relation of the system.
  Relation preceq;
  /// x ⪯∘ y: y = x + c∘ for some c.
  Relation preceqCirc;
  Predicate isQuasiZero;
  /// Multiplicative inverse of a tangible element, when it has one.
  std::function<std::optional<Element>(const Element&)> inverse;

  std::function<std::string(const Element&)> format;
  std::function<Element(std::string_view)> parse;

  /// Whole carrier in canonical order (finite instances only).
  std::optional<std::vector<Element>> elements;
  /// Representative elements for sampled checks on infinite instances.
  std::vector<Element> probe;
  /// Tangibles whose integer payload lies in [lo, hi] (infinite instances).
  std::function<std::vector<Element>(std::int64_t lo, std::int64_t hi)> tangibleWindow;

  SystemFlags flags;
  std::optional<OrderedMonoidSpec> monoid;
  System base;

  bool finite() const { return elements.has_value(); }
  bool unital() const { return one.has_value(); }
  /// Carrier when finite, probe set otherwise.
  const std::vector<Element>& domain() const { return elements ? *elements : probe; }
  /// Tangible members of domain(), in canonical order.
  std::vector<Element> tangibles() const;
  const Element& unit() const;
  std::string show(const Element& e) const { return format(e); }
};

/// Fills in derived members: sorts the carrier, and for finite carriers
/// supplies isQuasiZero / preceqCirc / preceq by enumeration when the
/// instance did not provide closed forms.
System finalize(SystemDescriptor descriptor);

void requireSameSystem(const System& a, const System& b);

}  // namespace systema
