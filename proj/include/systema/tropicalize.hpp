#pragma once

// Finite-support Puiseux series over ℚ, the valuation val = min exponent,
// tropicalization into min-plus targets, and valuated matroids.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "systema/polysys.hpp"
#include "systema/rational.hpp"

namespace systema {

class PuiseuxSeries {
 public:
  /// The zero series.
  PuiseuxSeries() = default;
  static PuiseuxSeries monomial(const Rational& coefficient, const Rational& exponent);
  static PuiseuxSeries constant(const Rational& c) { return monomial(c, Rational(0)); }

  /// exponent ↦ nonzero coefficient
  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isMonomial() const { return terms_.size() == 1; }
  /// Least common denominator N of the exponents (1 for the zero series).
  mpz_class denominator() const;

  /// Terms "c*t^(k/N)" joined by '+', e.g. "3*t^(1/2)+t^2", "1-t", "0".
  std::string str() const;
  static PuiseuxSeries parse(std::string_view text);

  bool operator==(const PuiseuxSeries&) const = default;

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries operator-() const;

 private:
  void put(const Rational& exponent, const Rational& coefficient);
  std::map<Rational, Rational> terms_;
};

PuiseuxSeries puiseuxAdd(const PuiseuxSeries& p, const PuiseuxSeries& q);
PuiseuxSeries puiseuxMul(const PuiseuxSeries& p, const PuiseuxSeries& q);
/// Minimum exponent; nullopt stands for +∞ (the zero series).
std::optional<Rational> puiseuxVal(const PuiseuxSeries& p);

/// Polynomial with Puiseux series coefficients. Zero coefficients are accepted
/// and dropped, so terms() only lists nonzero series.
class SeriesPolynomial {
 public:
  SeriesPolynomial(std::size_t vars, std::map<std::vector<std::uint32_t>, PuiseuxSeries> terms);

  std::size_t vars() const { return vars_; }
  const std::map<std::vector<std::uint32_t>, PuiseuxSeries>& terms() const { return terms_; }

  SeriesPolynomial operator*(const SeriesPolynomial& other) const;
  SeriesPolynomial scaled(const PuiseuxSeries& s) const;
  bool operator==(const SeriesPolynomial&) const = default;

 private:
  std::size_t vars_;
  std::map<std::vector<std::uint32_t>, PuiseuxSeries> terms_;
};

/// Coefficientwise valuation into minplus; zero coefficients drop out.
Polynomial tropPoly(const SeriesPolynomial& p);
/// As tropPoly, with tangible coefficients in supertropical:minplus.
Polynomial supertropicalizePoly(const SeriesPolynomial& p);
/// Divides every coefficient by the coefficient at `exponents`, which must be a nonzero monomial series.
SeriesPolynomial normalizeAt(const SeriesPolynomial& p, const std::vector<std::uint32_t>& exponents);

/// v : E^m → ℚ ∪ {𝟘}, 𝟘 = +∞ under min-plus. Unlisted tuples are 𝟘.
struct ValuatedMatroidTable {
  std::vector<std::string> ground;
  std::size_t rank = 0;
  std::map<std::vector<std::size_t>, Rational> values;

  std::optional<Rational> value(const std::vector<std::size_t>& tuple) const;
};

struct MatroidViolation {
  std::string axiom;  // "nonzero", "symmetric", "repeats", "exchange"
  std::vector<std::size_t> tuple;   // e₁..e_m (or the offending tuple)
  std::vector<std::size_t> other;   // e₀, e₂'..e_m' for the exchange axiom
};

struct MatroidCheck {
  bool valid = true;
  std::optional<MatroidViolation> violation;
};

/// Axioms (nonzero basis, symmetry and vanishing on repeats, exchange); |E| ≤ 8, m ≤ 4.
MatroidCheck valuatedMatroidCheck(const ValuatedMatroidTable& table);

/// Classical determinant over Puiseux series (Leibniz expansion).
PuiseuxSeries seriesDet(const std::vector<std::vector<PuiseuxSeries>>& a);

/// v(column tuple) = val of the m × m minor on those columns; A has m rows.
ValuatedMatroidTable matroidFromMinors(const std::vector<std::vector<PuiseuxSeries>>& a, std::size_t m);

}  // namespace systema
