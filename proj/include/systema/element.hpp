#pragma once

// Carrier elements.
//
// An Element is an opaque canonical value; which alternative it holds is
// decided by the system that produced it. Every alternative is kept in
// canonical form, so `==` is semantic equality and `<=>` is the fixed
// lexicographic order used for all enumerations and witness searches.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "systema/phase_set.hpp"
#include "systema/rational.hpp"

namespace systema {

class Element;

/// Value of a bipotent ordered-monoid base (Boolean, chains, max/min-plus): 𝟘 or a monoid value.
struct Extended {
  bool isZero = true;
  Rational value;
  auto operator<=>(const Extended&) const = default;
};

/// Supertropical layer: 𝟘, a tangible value, or its ghost.
struct Layered {
  enum class Layer : std::uint8_t { Zero, Tangible, Ghost };
  Layer layer = Layer::Zero;
  Rational value;
  auto operator<=>(const Layered&) const = default;
};

/// Symmetrized pair (a₀, a₁) over some base carrier.
struct Pair {
  std::vector<Element> parts;  // always two entries
  bool operator==(const Pair& o) const;
  std::strong_ordering operator<=>(const Pair& o) const;
};

/// Subset of a finite hyperfield, one bit per hyperfield point.
struct PointSet {
  std::uint32_t bits = 0;
  auto operator<=>(const PointSet&) const = default;
};

/// Element of the tropical hyperfield power set: {-∞}, {a}, or the ray [-∞, a].
struct TropicalSet {
  enum class Kind : std::uint8_t { Zero, Point, Ray };
  Kind kind = Kind::Zero;
  Rational value;
  auto operator<=>(const TropicalSet&) const = default;
};

/// Classical number (integers, naturals, rationals).
struct Classical {
  Rational value;
  auto operator<=>(const Classical&) const = default;
};

class Element {
 public:
  using Payload = std::variant<Extended, Layered, Pair, PointSet, TropicalSet, PhaseSet, Classical>;

  Element() = default;
  template <class T>
    requires std::is_constructible_v<Payload, T&&>
  Element(T&& payload) : payload_(std::forward<T>(payload)) {}  // NOLINT(google-explicit-constructor)

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(payload_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(payload_);
  }
  const Payload& payload() const { return payload_; }

  bool operator==(const Element& o) const { return payload_ == o.payload_; }
  std::strong_ordering operator<=>(const Element& o) const;

 private:
  Payload payload_;
};

/// Structural dump for diagnostics; systems supply the user-facing token syntax.
std::ostream& operator<<(std::ostream& os, const Element& e);

inline Element makePair(Element a0, Element a1) { return Pair{{std::move(a0), std::move(a1)}}; }

}  // namespace systema
