#pragma once

// Polynomials over a system, viewed through their values.
//
// A Polynomial is a formal object: a sorted list of monomials with tangible
// coefficients. Nothing here identifies two polynomials because they agree
// as functions; circEquivalent and bendEquivalent are the only comparisons
// of behaviour.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "systema/system.hpp"

namespace systema {

using Point = std::vector<Element>;

struct Monomial {
  std::vector<std::uint32_t> exponents;
  Element coefficient;
  bool operator==(const Monomial&) const = default;
};

class Polynomial {
 public:
  /// Sorts the terms by exponent tuple. Repeated exponents are combined when
  /// the combined coefficient is tangible and rejected otherwise.
  Polynomial(System s, std::size_t vars, std::vector<Monomial> terms);
  static Polynomial zero(System s, std::size_t vars);

  const System& system() const { return system_; }
  std::size_t vars() const { return vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::uint32_t degree() const;

  /// f with the i-th term deleted.
  Polynomial without(std::size_t i) const;
  /// Formal sum; same combination rule as the constructor.
  Polynomial plus(const Polynomial& other) const;

  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  System system_;
  std::size_t vars_;
  std::vector<Monomial> terms_;
};

struct Domain {
  std::vector<Point> points;
  bool sampled = false;
};
/// carrier^vars for finite systems; the window grid (payload values -2..2 and 𝟘) otherwise.
Domain fullDomain(const System& s, std::size_t vars);
/// (tangibles with payload in [lo, hi]) ∪ {𝟘}, to the power vars; always labeled sampled for infinite systems.
Domain windowDomain(const System& s, std::size_t vars, std::int64_t lo, std::int64_t hi);

Element evalPoly(const Polynomial& f, const Point& point);
/// Points of the domain where f lands in 𝒯.
std::vector<Point> circSupp(const Polynomial& f, const Domain& domain);
bool isPreceqRoot(const Polynomial& f, const Point& point);
/// Domain points that are ⪯-roots of f.
std::vector<Point> preceqRoots(const Polynomial& f, const Domain& domain);

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<Point> witness;  // first point where f∘ and g∘ differ
  bool sampled = false;
};
EquivalenceResult circEquivalent(const Polynomial& f, const Polynomial& g, const Domain& domain);

std::vector<Polynomial> bendNeighbors(const Polynomial& f);
/// Decided by ∘-equivalence.
EquivalenceResult bendEquivalent(const Polynomial& f, const Polynomial& g, const Domain& domain);

enum class ChainOutcome { Connected, NotConnected, Inconclusive };
std::string_view toString(ChainOutcome outcome);

struct ChainSearchOptions {
  std::size_t maxDepth = 4;
  std::uint32_t maxDegree = 2;  // monomial universe: every exponent ≤ maxDegree in each variable
  std::uint64_t maxStates = 100'000;
};

struct ChainResult {
  ChainOutcome outcome = ChainOutcome::Inconclusive;
  std::vector<Polynomial> path;  // f, ..., g when connected
  std::uint64_t statesVisited = 0;
};

/// Breadth-first search from f to g. One step deletes a monomial h from the
/// current polynomial, or adds one at an unused exponent, provided h∘ is
/// absorbed by the rest at every domain point. Finite systems only.
ChainResult bendChainSearch(const Polynomial& f, const Polynomial& g, const Domain& domain,
                            const ChainSearchOptions& options = {});

struct IdealViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  Point point;
};
struct IdealResult {
  bool holds = true;
  std::optional<IdealViolation> violation;
  bool sampled = false;
};
/// For every pair i < j and every s in both ∘-supports there are tangible a, b
/// with a f_i(s) (-) b f_j(s) ∉ 𝒯.
IdealResult tropicalIdealCheck(const std::vector<Polynomial>& fs, const Domain& domain);

}  // namespace systema
