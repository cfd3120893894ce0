#pragma once

// Helpers shared by the unit tests, and oracles that recompute results
// without going through the library's system arithmetic.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "systema/instances.hpp"
#include "systema/linalg.hpp"
#include "systema/rational.hpp"
#include "systema/tropicalize.hpp"

namespace testing {

using namespace systema;

constexpr std::uint64_t kSeed = 0x5eed2024;

inline Element el(const System& s, const std::string& token) { return s->parse(token); }

inline std::string show(const System& s, const Element& e) { return s->show(e); }

inline Matrix mat(const System& s, std::size_t r, std::size_t c, std::initializer_list<const char*> tokens) {
  std::vector<Element> entries;
  for (const char* t : tokens) entries.push_back(s->parse(t));
  return Matrix(s, r, c, std::move(entries));
}

inline Vector vec(const System& s, std::initializer_list<const char*> tokens) {
  std::vector<Element> entries;
  for (const char* t : tokens) entries.push_back(s->parse(t));
  return Vector(s, std::move(entries));
}

inline std::vector<std::string> showAll(const System& s, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(s->show(x));
  return out;
}

/// All matrices with entries from `pool`, in odometer order.
template <class F>
void forEachMatrix(const System& s, std::size_t r, std::size_t c, const std::vector<Element>& pool, F&& f) {
  std::vector<std::size_t> idx(r * c, 0);
  while (true) {
    std::vector<Element> entries;
    for (auto i : idx) entries.push_back(pool[i]);
    f(Matrix(s, r, c, std::move(entries)));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == pool.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

// ---------------------------------------------------------------- supertropical max-plus oracle

/// An entry of a supertropical max-plus matrix, kept outside the library types.
struct ST {
  bool zero = true;
  Rational value;
  bool ghost = false;

  static ST tangible(std::int64_t v) { return {false, Rational(v), false}; }
  static ST ghostOf(std::int64_t v) { return {false, Rational(v), true}; }

  std::string token() const {
    if (zero) return "-inf";
    return value.str() + (ghost ? "v" : "");
  }
};

inline ST stAdd(const ST& a, const ST& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  if (a.value > b.value) return a;
  if (b.value > a.value) return b;
  return {false, a.value, true};
}

inline ST stMul(const ST& a, const ST& b) {
  if (a.zero || b.zero) return {};
  return {false, a.value + b.value, a.ghost || b.ghost};
}

/// Permanent by Heap's algorithm; negation is the identity in this system.
inline ST stPermanent(const std::vector<std::vector<ST>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return {false, Rational(0), false};
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  ST total;
  auto visit = [&] {
    ST term{false, Rational(0), false};
    for (std::size_t i = 0; i < n; ++i) term = stMul(term, a[i][p[i]]);
    total = stAdd(total, term);
  };
  std::vector<std::size_t> c(n, 0);
  visit();
  std::size_t i = 0;
  while (i < n) {
    if (c[i] < i) {
      std::swap(p[i % 2 == 0 ? 0 : c[i]], p[i]);
      visit();
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return total;
}

inline std::vector<std::vector<ST>> toST(const Matrix& a) {
  std::vector<std::vector<ST>> out(a.rows(), std::vector<ST>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::string t = a.system()->show(a(i, j));
      if (t == "-inf") continue;
      const bool g = t.back() == 'v';
      out[i][j] = {false, Rational::parse(g ? t.substr(0, t.size() - 1) : t), g};
    }
  return out;
}

// ---------------------------------------------------------------- sign oracle

/// Signs as +1, -1 and 0; a set of signs as a 3-bit mask {0, +, -}.
inline int signOf(char c) { return c == '+' ? 1 : c == '-' ? -1 : 0; }

/// Determinant of a matrix of +, -, 0 in the sign hyperfield power set:
/// collect the signs of the nonzero permutation terms.
inline std::string signDetOracle(const std::vector<std::string>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  bool plus = false, minus = false;
  do {
    int s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= signOf(rows[i][p[i]]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) s = -s;
    if (s > 0) plus = true;
    if (s < 0) minus = true;
  } while (std::next_permutation(p.begin(), p.end()));
  if (plus && minus) return "T";
  if (plus) return "+";
  if (minus) return "-";
  return "0";
}

/// Rows (strings over +, -) are T-dependent iff some nonempty subset with
/// signs α makes every column see both signs or nothing.
inline bool signRowsDependent(const std::vector<std::string>& rows) {
  const std::size_t k = rows.size();
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::uint32_t subset = 1; subset < (1u << k); ++subset) {
    for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
      if (signs & ~subset) continue;
      bool balanced = true;
      for (std::size_t j = 0; j < cols && balanced; ++j) {
        bool plus = false, minus = false;
        for (std::size_t i = 0; i < k; ++i) {
          if (!(subset >> i & 1)) continue;
          int s = signOf(rows[i][j]) * ((signs >> i & 1) ? -1 : 1);
          if (s > 0) plus = true;
          if (s < 0) minus = true;
        }
        balanced = (plus == minus);
      }
      if (balanced) return true;
    }
  }
  return false;
}

inline std::size_t signRowRankOracle(const std::vector<std::string>& rows) {
  std::size_t best = 0;
  for (std::uint32_t subset = 1; subset < (1u << rows.size()); ++subset) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (subset >> i & 1) chosen.push_back(rows[i]);
    if (!signRowsDependent(chosen)) best = std::max(best, chosen.size());
  }
  return best;
}

inline std::size_t signSubmatrixRankOracle(const std::vector<std::string>& rows) {
  const std::size_t r = rows.size(), c = rows[0].size();
  std::size_t best = 0;
  for (std::uint32_t rs = 1; rs < (1u << r); ++rs)
    for (std::uint32_t cs = 1; cs < (1u << c); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::string> sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rs >> i & 1)) continue;
        std::string row;
        for (std::size_t j = 0; j < c; ++j)
          if (cs >> j & 1) row += rows[i][j];
        sub.push_back(row);
      }
      const std::string d = signDetOracle(sub);
      if (d == "+" || d == "-") best = std::max<std::size_t>(best, sub.size());
    }
  return best;
}

// ---------------------------------------------------------------- dense Puiseux oracle

/// Σ c_k t^{k/N} with k ranging over [low, low + coeffs.size()).
struct DenseSeries {
  std::int64_t denominator = 1;
  std::int64_t low = 0;
  std::vector<Rational> coeffs;

  static DenseSeries from(const PuiseuxSeries& p, std::int64_t n) {
    DenseSeries d;
    d.denominator = n;
    if (p.isZero()) return d;
    std::vector<std::pair<std::int64_t, Rational>> scaled;
    for (const auto& [k, c] : p.terms()) scaled.emplace_back((k * Rational(n)).toInt64(), c);
    d.low = scaled.front().first;
    d.coeffs.assign(static_cast<std::size_t>(scaled.back().first - d.low + 1), Rational(0));
    for (const auto& [k, c] : scaled) d.coeffs[static_cast<std::size_t>(k - d.low)] = c;
    return d;
  }

  std::optional<Rational> val() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].isZero()) return Rational(low + static_cast<std::int64_t>(i), denominator);
    return std::nullopt;
  }
};

/// Schoolbook convolution over a shared denominator.
inline DenseSeries denseMul(const DenseSeries& a, const DenseSeries& b) {
  DenseSeries out;
  out.denominator = a.denominator;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.low = a.low + b.low;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

inline DenseSeries denseSub(const DenseSeries& a, const DenseSeries& b) {
  if (a.coeffs.empty()) {
    DenseSeries n = b;
    for (auto& c : n.coeffs) c = -c;
    return n;
  }
  if (b.coeffs.empty()) return a;
  DenseSeries out;
  out.denominator = a.denominator;
  out.low = std::min(a.low, b.low);
  const std::int64_t high =
      std::max(a.low + static_cast<std::int64_t>(a.coeffs.size()), b.low + static_cast<std::int64_t>(b.coeffs.size()));
  out.coeffs.assign(static_cast<std::size_t>(high - out.low), Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[static_cast<std::size_t>(a.low - out.low) + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[static_cast<std::size_t>(b.low - out.low) + i] -= b.coeffs[i];
  return out;
}

inline std::int64_t commonDenominator(std::initializer_list<const PuiseuxSeries*> ps) {
  std::int64_t n = 1;
  for (const auto* p : ps) n = std::lcm(n, p->denominator().get_si());
  return n;
}

/// Random finite series: up to `maxTerms` terms, exponents k/d with |k| ≤ 6, d ≤ 3.
inline PuiseuxSeries randomSeries(std::mt19937_64& rng, int maxTerms = 3) {
  std::uniform_int_distribution<int> terms(0, maxTerms), coef(-5, 5), num(-6, 6), den(1, 3);
  PuiseuxSeries p;
  for (int i = terms(rng); i > 0; --i) p = p + PuiseuxSeries::monomial(Rational(coef(rng)), Rational(num(rng), den(rng)));
  return p;
}

/// Nonzero random series.
inline PuiseuxSeries randomNonzeroSeries(std::mt19937_64& rng) {
  PuiseuxSeries p;
  while (p.isZero()) p = randomSeries(rng);
  return p;
}

// ---------------------------------------------------------------- valuated matroid oracle

/// Straight transcription of the three axioms over every tuple, no symmetry shortcuts.
inline bool matroidOracle(const ValuatedMatroidTable& t) {
  const std::size_t n = t.ground.size(), m = t.rank;
  auto v = [&](const std::vector<std::size_t>& tuple) { return t.value(tuple); };
  auto forAll = [&](std::size_t len, auto&& f) {
    std::vector<std::size_t> x(len, 0);
    while (true) {
      if (!f(x)) return false;
      std::size_t i = 0;
      while (i < len && ++x[i] == n) x[i++] = 0;
      if (i == len) return true;
    }
  };
  bool anyNonzero = false;
  forAll(m, [&](const std::vector<std::size_t>& x) {
    anyNonzero = anyNonzero || v(x).has_value();
    return true;
  });
  if (!anyNonzero) return false;
  const bool symmetric = forAll(m, [&](const std::vector<std::size_t>& x) {
    std::vector<std::size_t> s = x;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return !v(x).has_value();
    std::vector<std::size_t> p = s;
    do {
      if (v(p) != v(x)) return false;
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
  });
  if (!symmetric) return false;
  return forAll(m + 1, [&](const std::vector<std::size_t>& e) {  // e[0] = e₀, e[1..m] = e₁..e_m
    return forAll(m - 1, [&](const std::vector<std::size_t>& ep) {
      std::vector<std::size_t> base(e.begin() + 1, e.end());
      std::vector<std::size_t> left{e[0]};
      left.insert(left.end(), ep.begin(), ep.end());
      const auto a = v(base), b = v(left);
      if (!a || !b) return true;
      const Rational lhs = *a + *b;
      for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::size_t> swapped;
        for (std::size_t j = 0; j <= m; ++j)
          if (j != i) swapped.push_back(e[j]);
        std::vector<std::size_t> moved{e[i]};
        moved.insert(moved.end(), ep.begin(), ep.end());
        const auto c = v(swapped), d = v(moved);
        if (c && d && *c + *d <= lhs) return true;
      }
      return false;
    });
  });
}

}  // namespace testing
