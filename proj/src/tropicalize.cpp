#include "systema/tropicalize.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "systema/errors.hpp"
#include "systema/instances.hpp"

namespace systema {

// ---------------------------------------------------------------- series

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coefficient, const Rational& exponent) {
  PuiseuxSeries s;
  s.put(exponent, coefficient);
  return s;
}

void PuiseuxSeries::put(const Rational& exponent, const Rational& coefficient) {
  if (coefficient.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.isZero()) terms_.erase(it);
}

mpz_class PuiseuxSeries::denominator() const {
  mpz_class n = 1;
  for (const auto& [k, c] : terms_) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), k.denominator().get_mpz_t());
  return n;
}

namespace {

std::string termText(const Rational& k, const Rational& c) {
  if (k.isZero()) return c.str();
  std::string body = "t";
  if (k != Rational(1)) body += k.isInteger() ? "^" + k.str() : "^(" + k.str() + ")";
  if (c == Rational(1)) return body;
  if (c == Rational(-1)) return "-" + body;
  return c.str() + "*" + body;
}

[[noreturn]] void bad(const std::string& what, std::size_t offset) {
  throw ParseError("puiseux series: " + what, 1, offset + 1);
}

// One term without its leading sign: [coef][*]t[^exp] or coef.
PuiseuxSeries parseTerm(std::string_view piece, std::size_t offset, bool negative) {
  auto rational = [&](std::string_view text, std::size_t at) {
    try {
      return Rational::parse(text);
    } catch (const std::invalid_argument&) {
      bad("bad number '" + std::string(text) + "'", at);
    }
  };
  if (piece.empty()) bad("empty term", offset);
  const auto tpos = piece.find('t');
  Rational coefficient(1);
  Rational exponent(0);
  if (tpos == std::string_view::npos) {
    coefficient = rational(piece, offset);
  } else {
    std::string_view head = piece.substr(0, tpos);
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    if (!head.empty()) coefficient = rational(head, offset);
    std::string_view tail = piece.substr(tpos + 1);
    if (tail.empty()) {
      exponent = Rational(1);
    } else {
      if (tail.front() != '^') bad("expected '^' after t", offset + tpos + 1);
      tail.remove_prefix(1);
      if (!tail.empty() && tail.front() == '(') {
        if (tail.back() != ')') bad("unbalanced parenthesis", offset + tpos + 2);
        tail = tail.substr(1, tail.size() - 2);
      }
      exponent = rational(tail, offset + tpos + 2);
    }
  }
  return PuiseuxSeries::monomial(negative ? -coefficient : coefficient, exponent);
}

}  // namespace

std::string PuiseuxSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string t = termText(k, c);
    if (!out.empty() && t.front() != '-') out += '+';
    out += t;
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::parse(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> origin;  // offset in `text` of each kept character
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact += text[i];
    origin.push_back(i);
  }
  if (compact.empty()) bad("empty input", 0);

  PuiseuxSeries out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::size_t b = start;
    bool negative = false;
    while (b < end && (compact[b] == '+' || compact[b] == '-')) {
      if (compact[b] == '-') negative = !negative;
      ++b;
    }
    const std::size_t at = b < origin.size() ? origin[b] : text.size();
    out = out + parseTerm(std::string_view(compact).substr(b, end - b), at, negative);
  };
  for (std::size_t i = 0; i < compact.size(); ++i) {
    const char ch = compact[i];
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) bad("unbalanced parenthesis", origin[i]);
    if (depth == 0 && (ch == '+' || ch == '-') && i > start) {
      const char prev = compact[i - 1];
      if (prev != '^' && prev != '*' && prev != '/' && prev != '+' && prev != '-') {
        flush(i);
        start = i;
      }
    }
  }
  if (depth != 0) bad("unbalanced parenthesis", text.size());
  flush(compact.size());
  return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries out = a;
  for (const auto& [k, c] : b.terms_) out.put(k, c);
  return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries out;
  for (const auto& [k1, c1] : a.terms_)
    for (const auto& [k2, c2] : b.terms_) out.put(k1 + k2, c1 * c2);
  return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

PuiseuxSeries puiseuxAdd(const PuiseuxSeries& p, const PuiseuxSeries& q) { return p + q; }
PuiseuxSeries puiseuxMul(const PuiseuxSeries& p, const PuiseuxSeries& q) { return p * q; }

std::optional<Rational> puiseuxVal(const PuiseuxSeries& p) {
  if (p.isZero()) return std::nullopt;
  return p.terms().begin()->first;
}

// ---------------------------------------------------------------- polynomials

SeriesPolynomial::SeriesPolynomial(std::size_t vars, std::map<std::vector<std::uint32_t>, PuiseuxSeries> terms)
    : vars_(vars) {
  for (auto& [exps, s] : terms) {
    if (exps.size() != vars) throw PreconditionError("series polynomial: exponent tuple has wrong arity");
    if (!s.isZero()) terms_.emplace(exps, std::move(s));
  }
}

SeriesPolynomial SeriesPolynomial::operator*(const SeriesPolynomial& other) const {
  if (vars_ != other.vars_) throw PreconditionError("series polynomial: variable counts differ");
  std::map<std::vector<std::uint32_t>, PuiseuxSeries> out;
  for (const auto& [e1, s1] : terms_)
    for (const auto& [e2, s2] : other.terms_) {
      std::vector<std::uint32_t> e(vars_);
      for (std::size_t i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
      auto& slot = out[e];
      slot = slot + s1 * s2;
    }
  return SeriesPolynomial(vars_, std::move(out));
}

SeriesPolynomial SeriesPolynomial::scaled(const PuiseuxSeries& s) const {
  std::map<std::vector<std::uint32_t>, PuiseuxSeries> out;
  for (const auto& [e, c] : terms_) out.emplace(e, c * s);
  return SeriesPolynomial(vars_, std::move(out));
}

namespace {

Polynomial valuationImage(const SeriesPolynomial& p, const System& target, Element (*lift)(const Rational&)) {
  std::vector<Monomial> terms;
  for (const auto& [e, s] : p.terms()) terms.push_back({e, lift(*puiseuxVal(s))});
  return Polynomial(target, p.vars(), std::move(terms));
}

Element minplusValue(const Rational& v) { return Extended{false, v}; }
Element supertropicalValue(const Rational& v) { return Layered{Layered::Layer::Tangible, v}; }

}  // namespace

Polynomial tropPoly(const SeriesPolynomial& p) {
  return valuationImage(p, resolveInstance("minplus"), &minplusValue);
}

Polynomial supertropicalizePoly(const SeriesPolynomial& p) {
  return valuationImage(p, resolveInstance("supertropical:minplus"), &supertropicalValue);
}

SeriesPolynomial normalizeAt(const SeriesPolynomial& p, const std::vector<std::uint32_t>& exponents) {
  auto it = p.terms().find(exponents);
  if (it == p.terms().end()) throw PreconditionError("normalize: no term at the given exponent");
  if (!it->second.isMonomial()) throw PreconditionError("normalize: pivot coefficient is not a monomial series");
  const auto& [k, c] = *it->second.terms().begin();
  return p.scaled(PuiseuxSeries::monomial(Rational(1) / c, -k));
}

// ---------------------------------------------------------------- valuated matroids

std::optional<Rational> ValuatedMatroidTable::value(const std::vector<std::size_t>& tuple) const {
  auto it = values.find(tuple);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

namespace {

bool hasRepeat(std::vector<std::size_t> t) {
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) != t.end();
}

// Γ-product of two values; nullopt is 𝟘.
std::optional<Rational> times(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Increasing k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

MatroidCheck valuatedMatroidCheck(const ValuatedMatroidTable& table) {
  const std::size_t n = table.ground.size();
  const std::size_t m = table.rank;
  if (n == 0 || n > 8) throw PreconditionError("valuated matroid: ground set must have 1..8 elements");
  if (m == 0 || m > 4) throw PreconditionError("valuated matroid: rank must be 1..4");
  for (const auto& [t, v] : table.values) {
    if (t.size() != m) throw PreconditionError("valuated matroid: tuple length differs from the rank");
    for (auto e : t)
      if (e >= n) throw PreconditionError("valuated matroid: tuple index outside the ground set");
  }

  auto fail = [](std::string axiom, std::vector<std::size_t> tuple, std::vector<std::size_t> other = {}) {
    return MatroidCheck{false, MatroidViolation{std::move(axiom), std::move(tuple), std::move(other)}};
  };

  if (table.values.empty()) return fail("nonzero", {});

  // Every tuple in E^m: vanishing on repeats and invariance under sorting.
  std::vector<std::size_t> t(m, 0);
  while (true) {
    const auto v = table.value(t);
    if (hasRepeat(t)) {
      if (v) return fail("repeats", t);
    } else {
      auto sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (v != table.value(sorted)) return fail("symmetric", t);
    }
    std::size_t i = m;
    while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
    if (i == 0) break;
  }

  // Exchange. With symmetry established, e₁..e_m and e₂'..e_m' range over
  // increasing tuples without loss.
  for (const auto& e : combinations(n, m)) {
    const auto ve = table.value(e);
    if (!ve) continue;
    for (std::size_t e0 = 0; e0 < n; ++e0) {
      for (const auto& ep : combinations(n, m - 1)) {
        std::vector<std::size_t> left{e0};
        left.insert(left.end(), ep.begin(), ep.end());
        const auto lhs = times(ve, table.value(left));
        if (!lhs) continue;  // 𝟘 is below everything
        bool ok = false;
        for (std::size_t i = 0; i < m && !ok; ++i) {
          std::vector<std::size_t> swapped{e0};
          for (std::size_t j = 0; j < m; ++j)
            if (j != i) swapped.push_back(e[j]);
          std::vector<std::size_t> moved{e[i]};
          moved.insert(moved.end(), ep.begin(), ep.end());
          const auto rhs = times(table.value(swapped), table.value(moved));
          // lhs ≤ rhs in Γ, whose order reverses ℚ under min-plus.
          ok = rhs && *rhs <= *lhs;
        }
        if (!ok) return fail("exchange", e, left);
      }
    }
  }
  return {};
}

PuiseuxSeries seriesDet(const std::vector<std::vector<PuiseuxSeries>>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("series determinant: matrix is not square");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PuiseuxSeries total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    PuiseuxSeries term = PuiseuxSeries::constant(Rational(1));
    for (std::size_t i = 0; i < n && !term.isZero(); ++i) term = term * a[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ValuatedMatroidTable matroidFromMinors(const std::vector<std::vector<PuiseuxSeries>>& a, std::size_t m) {
  if (a.size() != m) throw PreconditionError("matroid from minors: matrix must have exactly m rows");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("matroid from minors: ragged matrix");
  if (m == 0 || m > 4 || n < m || n > 8)
    throw PreconditionError("matroid from minors: need 1 ≤ m ≤ 4 and m ≤ columns ≤ 8");

  ValuatedMatroidTable table;
  table.rank = m;
  for (std::size_t j = 0; j < n; ++j) table.ground.push_back(std::to_string(j + 1));

  // Every ordered tuple of distinct columns gets its own determinant.
  for (const auto& cols : combinations(n, m)) {
    auto perm = cols;
    do {
      std::vector<std::vector<PuiseuxSeries>> minor(m, std::vector<PuiseuxSeries>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) minor[i][j] = a[i][perm[j]];
      if (auto v = puiseuxVal(seriesDet(minor))) table.values.emplace(perm, *v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return table;
}

}  // namespace systema
