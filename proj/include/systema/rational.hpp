#pragma once

// Exact rational numbers.
//
// Values that fit in a pair of int64 are kept inline; anything larger is
// promoted to a GMP rational. The representation is canonical (lowest terms,
// positive denominator, demoted to the inline form whenever it fits), so
// structural equality is value equality.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace systema {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "p/q", or a decimal such as "-2.75". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpq_class toMpq() const;

  bool isZero() const { return !big_ && num_ == 0; }
  bool isInteger() const;
  int sign() const;

  /// Numerator / denominator as GMP integers.
  mpz_class numerator() const;
  mpz_class denominator() const;

  /// x - floor(x), in [0, 1).
  Rational fractionalPart() const;
  /// Fits-in-int64 integer value; throws if not an integer or out of range.
  std::int64_t toInt64() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational fromMpq(mpq_class q);
  static Rational normalized(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace systema
