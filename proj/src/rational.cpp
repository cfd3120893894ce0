#include "systema/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace systema {
namespace {

constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v > kMin && v <= kMax; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class toMpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) *this = fromMpq(mpq_class(mpz_class(static_cast<long>(n))));
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = normalized(n, d);
}

Rational::Rational(const mpq_class& q) { *this = fromMpq(q); }

Rational Rational::fromMpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    Rational r;
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::normalized(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return fromMpq(mpq_class(toMpz(n), toMpz(d)));
}

mpq_class Rational::toMpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw std::invalid_argument("mixed '.' and '/'");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t scale = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad decimal");
      for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
        if (digits[i] < '0' || digits[i] > '9') throw std::invalid_argument("bad decimal digit");
      if (digits[0] == '+') digits.erase(0, 1);
      mpz_class n(digits, 10);
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), 10, scale);
      return fromMpq(mpq_class(n, d));
    }
    if (s[0] == '+') s.erase(0, 1);
    for (char c : s)
      if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) throw std::invalid_argument("bad character");
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return fromMpq(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::isInteger() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

Rational Rational::fractionalPart() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    std::int64_t r = num_ % den_;
    if (r < 0) {
      r += den_;
      --q;
    }
    return normalized(r, den_);
  }
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return fromMpq(*big_ - mpq_class(fl));
}

std::int64_t Rational::toInt64() const {
  if (big_ || den_ != 1) throw std::domain_error("rational " + str() + " is not a machine integer");
  return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 s = static_cast<__int128>(a.num_) + b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    return Rational::normalized(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                                static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::fromMpq(a.toMpq() + b.toMpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;  // num_ is never INT64_MIN in the inline form
    r.den_ = den_;
    return r;
  }
  return fromMpq(-*big_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return Rational::normalized(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::fromMpq(a.toMpq() * b.toMpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.isZero()) throw std::domain_error("division by zero rational");
  if (!a.big_ && !b.big_) {
    return Rational::normalized(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  return Rational::fromMpq(a.toMpq() / b.toMpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a promoted value never fits inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.toMpq(), b.toMpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace systema
