#include "systema/polysys.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "systema/budget.hpp"
#include "systema/core.hpp"
#include "systema/errors.hpp"

namespace systema {

Polynomial::Polynomial(System s, std::size_t vars, std::vector<Monomial> terms)
    : system_(std::move(s)), vars_(vars) {
  const auto& S = *system_;
  for (const auto& t : terms) {
    if (t.exponents.size() != vars_)
      throw PreconditionError("monomial has " + std::to_string(t.exponents.size()) + " exponents, expected " +
                              std::to_string(vars_));
    if (!S.isTangible(t.coefficient))
      throw PreconditionError("coefficient " + S.format(t.coefficient) + " is not tangible");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponents == t.exponents) {
      Element c = S.add(terms_.back().coefficient, t.coefficient);
      if (!S.isTangible(c))
        throw PreconditionError("repeated exponent with non-tangible combined coefficient " + S.format(c));
      terms_.back().coefficient = c;
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::zero(System s, std::size_t vars) { return Polynomial(std::move(s), vars, {}); }

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    std::uint32_t total = 0;
    for (auto e : t.exponents) total += e;
    d = std::max(d, total);
  }
  return d;
}

Polynomial Polynomial::without(std::size_t i) const {
  if (i >= terms_.size()) throw PreconditionError("term index out of range");
  Polynomial out = *this;
  out.terms_.erase(out.terms_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  requireSameSystem(system_, other.system_);
  if (vars_ != other.vars_) throw PreconditionError("polynomials differ in variable count");
  std::vector<Monomial> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(system_, vars_, std::move(all));
}

namespace {

Domain powerDomain(const std::vector<Element>& values, std::size_t vars, bool sampled) {
  Domain d;
  d.sampled = sampled;
  std::vector<std::size_t> idx(vars, 0);
  if (values.empty()) return d;
  while (true) {
    Point p;
    for (auto i : idx) p.push_back(values[i]);
    d.points.push_back(std::move(p));
    std::size_t pos = vars;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < values.size()) break;
      idx[pos] = 0;
      if (pos == 0) return d;
    }
    if (vars == 0) return d;
  }
}

Element power(const SystemDescriptor& S, const Element& x, std::uint32_t e, Element acc) {
  for (std::uint32_t k = 0; k < e; ++k) acc = S.mul(acc, x);
  return acc;
}

Element monomialValue(const SystemDescriptor& S, const Monomial& m, const Point& p) {
  Element v = m.coefficient;
  for (std::size_t i = 0; i < p.size(); ++i) v = power(S, p[i], m.exponents[i], v);
  return v;
}

}  // namespace

Domain fullDomain(const System& s, std::size_t vars) {
  if (s->finite()) return powerDomain(*s->elements, vars, false);
  return windowDomain(s, vars, -2, 2);
}

Domain windowDomain(const System& s, std::size_t vars, std::int64_t lo, std::int64_t hi) {
  if (!s->tangibleWindow) throw PreconditionError("system " + s->name + " has no tangible window");
  std::vector<Element> values = s->tangibleWindow(lo, hi);
  values.push_back(s->zero);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return powerDomain(values, vars, !s->finite());
}

Element evalPoly(const Polynomial& f, const Point& point) {
  if (point.size() != f.vars())
    throw PreconditionError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(f.vars()));
  const auto& S = *f.system();
  Element sum = S.zero;
  for (const auto& m : f.terms()) sum = S.add(sum, monomialValue(S, m, point));
  return sum;
}

std::vector<Point> circSupp(const Polynomial& f, const Domain& domain) {
  std::vector<Point> out;
  for (const auto& p : domain.points)
    if (f.system()->isTangible(evalPoly(f, p))) out.push_back(p);
  return out;
}

bool isPreceqRoot(const Polynomial& f, const Point& point) {
  const auto& S = *f.system();
  return S.preceq(S.zero, evalPoly(f, point));
}

std::vector<Point> preceqRoots(const Polynomial& f, const Domain& domain) {
  std::vector<Point> out;
  for (const auto& p : domain.points)
    if (isPreceqRoot(f, p)) out.push_back(p);
  return out;
}

EquivalenceResult circEquivalent(const Polynomial& f, const Polynomial& g, const Domain& domain) {
  requireSameSystem(f.system(), g.system());
  if (f.vars() != g.vars()) throw PreconditionError("polynomials differ in variable count");
  const auto& S = *f.system();
  EquivalenceResult out;
  out.sampled = domain.sampled;
  for (const auto& p : domain.points) {
    if (quasiZero(S, evalPoly(f, p)) != quasiZero(S, evalPoly(g, p))) {
      out.equivalent = false;
      out.witness = p;
      return out;
    }
  }
  return out;
}

std::vector<Polynomial> bendNeighbors(const Polynomial& f) {
  if (f.isZero()) throw PreconditionError("bendNeighbors needs at least one monomial");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.terms().size(); ++i) out.push_back(f.without(i));
  return out;
}

EquivalenceResult bendEquivalent(const Polynomial& f, const Polynomial& g, const Domain& domain) {
  return circEquivalent(f, g, domain);
}

std::string_view toString(ChainOutcome outcome) {
  switch (outcome) {
    case ChainOutcome::Connected: return "connected";
    case ChainOutcome::NotConnected: return "not-connected";
    case ChainOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// A state assigns to each exponent tuple of the universe either nothing (-1)
// or the index of a tangible coefficient.
using State = std::vector<int>;

struct ChainSpace {
  const SystemDescriptor& S;
  std::size_t vars;
  std::vector<std::vector<std::uint32_t>> exponents;
  std::vector<Element> coefficients;
  const Domain& domain;
  // value[e][c][p] = coefficient c times the exponent-e monomial at domain point p
  std::vector<std::vector<std::vector<Element>>> value;

  ChainSpace(const SystemDescriptor& s, std::size_t v, std::uint32_t maxDegree, const Domain& d)
      : S(s), vars(v), coefficients(s.tangibles()), domain(d) {
    std::vector<std::uint32_t> e(vars, 0);
    while (true) {
      exponents.push_back(e);
      std::size_t pos = vars;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++e[pos] <= maxDegree) {
          done = false;
          break;
        }
        e[pos] = 0;
      }
      if (done) break;
    }
    value.resize(exponents.size());
    for (std::size_t ei = 0; ei < exponents.size(); ++ei) {
      value[ei].resize(coefficients.size());
      for (std::size_t ci = 0; ci < coefficients.size(); ++ci)
        for (const auto& p : domain.points)
          value[ei][ci].push_back(monomialValue(S, Monomial{exponents[ei], coefficients[ci]}, p));
    }
  }

  State encode(const Polynomial& f) const {
    State st(exponents.size(), -1);
    for (const auto& t : f.terms()) {
      auto e = std::find(exponents.begin(), exponents.end(), t.exponents);
      auto c = std::find(coefficients.begin(), coefficients.end(), t.coefficient);
      if (e == exponents.end() || c == coefficients.end())
        throw PreconditionError("polynomial lies outside the chain-search universe");
      st[e - exponents.begin()] = static_cast<int>(c - coefficients.begin());
    }
    return st;
  }

  Polynomial decode(const System& sys, const State& st) const {
    std::vector<Monomial> terms;
    for (std::size_t ei = 0; ei < st.size(); ++ei)
      if (st[ei] >= 0) terms.push_back({exponents[ei], coefficients[static_cast<std::size_t>(st[ei])]});
    return Polynomial(sys, vars, std::move(terms));
  }

  // h∘ is absorbed by rest∘ at every point: rest(s)∘ + h(s)∘ = rest(s)∘.
  bool absorbed(const State& rest, std::size_t ei, int ci) const {
    for (std::size_t p = 0; p < domain.points.size(); ++p) {
      Element r = S.zero;
      for (std::size_t ej = 0; ej < rest.size(); ++ej)
        if (rest[ej] >= 0) r = S.add(r, value[ej][static_cast<std::size_t>(rest[ej])][p]);
      Element rc = quasiZero(S, r);
      if (S.add(rc, quasiZero(S, value[ei][static_cast<std::size_t>(ci)][p])) != rc) return false;
    }
    return true;
  }
};

}  // namespace

ChainResult bendChainSearch(const Polynomial& f, const Polynomial& g, const Domain& domain,
                            const ChainSearchOptions& options) {
  requireSameSystem(f.system(), g.system());
  if (f.vars() != g.vars()) throw PreconditionError("polynomials differ in variable count");
  const auto& S = *f.system();
  if (!S.finite()) throw PreconditionError("bend chain search needs a finite system");
  ChainSpace space(S, f.vars(), options.maxDegree, domain);
  const State start = space.encode(f);
  const State goal = space.encode(g);

  ChainResult out;
  std::map<State, State> parent{{start, start}};
  std::vector<State> frontier{start};
  auto finish = [&](const State& end) {
    std::vector<State> rev{end};
    while (rev.back() != start) rev.push_back(parent.at(rev.back()));
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.path.push_back(space.decode(f.system(), *it));
    out.outcome = ChainOutcome::Connected;
    out.statesVisited = parent.size();
    return out;
  };
  if (start == goal) return finish(start);

  for (std::size_t depth = 0; depth < options.maxDepth && !frontier.empty(); ++depth) {
    std::vector<State> next;
    for (const auto& st : frontier) {
      for (std::size_t ei = 0; ei < st.size(); ++ei) {
        std::vector<State> moves;
        if (st[ei] >= 0) {
          State rest = st;
          rest[ei] = -1;
          if (space.absorbed(rest, ei, st[ei])) moves.push_back(rest);
        } else {
          for (std::size_t ci = 0; ci < space.coefficients.size(); ++ci)
            if (space.absorbed(st, ei, static_cast<int>(ci))) {
              State grown = st;
              grown[ei] = static_cast<int>(ci);
              moves.push_back(grown);
            }
        }
        for (auto& m : moves) {
          if (!parent.emplace(m, st).second) continue;
          if (m == goal) return finish(m);
          if (parent.size() > options.maxStates) {
            out.statesVisited = parent.size();
            return out;
          }
          next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  out.statesVisited = parent.size();
  out.outcome = frontier.empty() ? ChainOutcome::NotConnected : ChainOutcome::Inconclusive;
  return out;
}

IdealResult tropicalIdealCheck(const std::vector<Polynomial>& fs, const Domain& domain) {
  IdealResult out;
  out.sampled = domain.sampled;
  if (fs.empty()) return out;
  const System& sys = fs.front().system();
  for (const auto& f : fs) requireSameSystem(sys, f.system());
  const auto& S = *sys;
  if (!S.finite()) throw PreconditionError("tropicalIdealCheck needs a finite tangible set");
  const auto scalars = S.tangibles();
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      for (const auto& s : domain.points) {
        Element fi = evalPoly(fs[i], s);
        Element fj = evalPoly(fs[j], s);
        if (!S.isTangible(fi) || !S.isTangible(fj)) continue;
        bool escaped = false;
        for (const auto& a : scalars) {
          for (const auto& b : scalars) {
            if (++examined > defaultBudget().searchLimit) throw BudgetExceeded("tropicalIdealCheck search budget");
            if (!S.isTangible(S.add(S.mul(a, fi), S.negate(S.mul(b, fj))))) {
              escaped = true;
              break;
            }
          }
          if (escaped) break;
        }
        if (!escaped) {
          out.holds = false;
          out.violation = IdealViolation{i, j, s};
          return out;
        }
      }
  return out;
}

}  // namespace systema
