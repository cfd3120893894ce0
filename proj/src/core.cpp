#include "systema/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "systema/budget.hpp"
#include "systema/errors.hpp"

namespace systema {

Element quasiZero(const SystemDescriptor& S, const Element& b) { return S.add(b, S.negate(b)); }

bool isQuasiZero(const SystemDescriptor& S, const Element& b) { return S.isQuasiZero(b); }

SpecialElements specialElements(const SystemDescriptor& S) {
  const Element& one = S.unit();
  Element e = quasiZero(S, one);
  return {e, S.add(e, one), S.add(e, e)};
}

NegationKindResult negationKind(const SystemDescriptor& S) {
  NegationKindResult out;
  out.inspected = S.tangibles();
  out.sampled = !S.finite();
  if (out.inspected.empty()) throw PreconditionError("system " + S.name + " has no tangibles to inspect");
  std::size_t fixed = 0;
  for (const auto& a : out.inspected)
    if (S.negate(a) == a) ++fixed;
  if (fixed == out.inspected.size())
    out.kind = NegationKind::First;
  else if (fixed == 0)
    out.kind = NegationKind::Second;
  else
    out.kind = NegationKind::Mixed;
  return out;
}

std::string Characteristic::str() const {
  if (!value) return "exceeds bound";
  return std::to_string(*value);
}

Characteristic characteristic(const SystemDescriptor& S, std::size_t bound) {
  Characteristic out;
  out.sampled = !S.finite();
  const auto& dom = S.domain();
  if (S.finite()) {
    // n·a is eventually periodic; (k+1)a = a exactly when a lies on its own
    // cycle and k is a multiple of the cycle length.
    std::uint64_t lcm = 1;
    for (const auto& a : dom) {
      Element x = S.add(a, a);
      std::uint64_t period = 1;
      while (x != a && period <= dom.size()) {
        x = S.add(x, a);
        ++period;
      }
      if (x != a) {
        out.value = 0;
        return out;
      }
      lcm = std::lcm(lcm, period);
      if (lcm > bound) return out;
    }
    out.value = lcm;
    return out;
  }
  std::vector<Element> multiple = dom;  // (k+1)·a, starting at k = 1
  for (std::size_t i = 0; i < dom.size(); ++i) multiple[i] = S.add(dom[i], dom[i]);
  for (std::size_t k = 1; k <= bound; ++k) {
    bool all = true;
    for (std::size_t i = 0; i < dom.size() && all; ++i) all = multiple[i] == dom[i];
    if (all) {
      out.value = k;
      return out;
    }
    for (std::size_t i = 0; i < dom.size(); ++i) multiple[i] = S.add(multiple[i], dom[i]);
  }
  return out;
}

Characteristic characteristic(const SystemDescriptor& S) {
  return characteristic(S, defaultBudget().characteristicBound);
}

std::optional<std::size_t> heightOf(const SystemDescriptor& S, const Element& b, std::size_t bound) {
  if (b == S.zero) return 0;
  auto tangibles = S.tangibles();
  std::set<Element> level(tangibles.begin(), tangibles.end());
  for (std::size_t t = 1; t <= bound; ++t) {
    if (level.count(b)) return t;
    std::set<Element> next;
    for (const auto& x : level)
      for (const auto& a : tangibles) next.insert(S.add(x, a));
    // A level that reproduces itself is a fixed point, so b never appears.
    if (next == level) return std::nullopt;
    level = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::size_t> heightOf(const SystemDescriptor& S, const Element& b) {
  return heightOf(S, b, defaultBudget().heightBound);
}

namespace {

template <class Fn>
Verdict overTangiblePairs(const SystemDescriptor& S, Fn&& holds) {
  Verdict v;
  v.sampled = !S.finite();
  auto tangibles = S.tangibles();
  for (const auto& a : tangibles)
    for (const auto& b : tangibles)
      if (!holds(a, b)) {
        v.holds = false;
        v.counterexample = {a, b};
        return v;
      }
  return v;
}

}  // namespace

Verdict checkMetaTangible(const SystemDescriptor& S) {
  return overTangiblePairs(S, [&](const Element& a, const Element& b) {
    return b == S.negate(a) || S.isTangible(S.add(a, b));
  });
}

Verdict checkMinusBipotent(const SystemDescriptor& S) {
  return overTangiblePairs(S, [&](const Element& a, const Element& b) {
    if (b == S.negate(a)) return true;
    Element s = S.add(a, b);
    return S.isTangible(s) && (s == a || s == b);
  });
}

bool isMetaTangible(const SystemDescriptor& S) { return checkMetaTangible(S).holds; }
bool isMinusBipotent(const SystemDescriptor& S) { return checkMinusBipotent(S).holds; }

Verdict checkReversibility(const SystemDescriptor& S) {
  Verdict v;
  v.sampled = !S.finite();
  auto tangibles = S.tangibles();
  for (const auto& a : tangibles)
    for (const auto& b : tangibles)
      for (const auto& c : S.domain()) {
        if (S.preceq(a, S.add(b, c)) && !S.preceq(b, S.add(a, S.negate(c)))) {
          v.holds = false;
          v.counterexample = {a, b, c};
          return v;
        }
      }
  return v;
}

std::optional<Verdict> tangibleSumTrichotomy(const SystemDescriptor& S) {
  if (!isMetaTangible(S)) return std::nullopt;
  return overTangiblePairs(S, [&](const Element& a, const Element& b) {
    return a == S.negate(b) || S.add(a, b) == a || S.add(quasiZero(S, a), b) == b;
  });
}

HeightTwoEquivalence heightTwoEquivalence(const SystemDescriptor& S) {
  HeightTwoEquivalence out;
  out.sampled = !S.finite();
  auto tangibles = S.tangibles();
  std::set<Element> covered(tangibles.begin(), tangibles.end());
  covered.insert(S.zero);
  for (const auto& a : tangibles) covered.insert(quasiZero(S, a));
  out.tangiblesAndQuasiTangiblesCover =
      std::all_of(S.domain().begin(), S.domain().end(), [&](const Element& x) { return covered.count(x) > 0; });

  bool meta = isMetaTangible(S);
  bool heightTwo = std::all_of(S.domain().begin(), S.domain().end(), [&](const Element& x) {
    auto h = heightOf(S, x, 2);
    return h.has_value();
  });
  out.metaTangibleHeightTwo = meta && heightTwo;
  auto sp = specialElements(S);
  out.metaTangibleUnitShape = meta && (sp.ePrime == S.unit() || sp.ePrime == sp.e);
  return out;
}

Verdict checkUniquelyNegated(const SystemDescriptor& S) {
  Verdict v;
  v.sampled = !S.finite();
  auto tangibles = S.tangibles();
  for (const auto& a : tangibles) {
    std::size_t count = 0;
    for (const auto& b : tangibles)
      if (S.isQuasiZero(S.add(a, b))) ++count;
    if (count != 1) {
      v.holds = false;
      v.counterexample = {a};
      return v;
    }
  }
  return v;
}

std::string_view toString(AxiomGroup group) {
  switch (group) {
    case AxiomGroup::Module: return "module";
    case AxiomGroup::Negation: return "negation";
    case AxiomGroup::Triple: return "triple";
    case AxiomGroup::Surpassing: return "surpassing";
    case AxiomGroup::Interpretation: return "interpretation";
  }
  return "?";
}

namespace {

enum class Range { Carrier, Tangible };

struct AxiomSpec {
  std::string_view name;
  AxiomGroup group;
  std::vector<Range> args;
  bool needsUnit;
  std::function<bool(const SystemDescriptor&, const std::vector<Element>&)> holds;
};

using Args = std::vector<Element>;
constexpr Range C = Range::Carrier;
constexpr Range T = Range::Tangible;

const std::vector<AxiomSpec>& axiomTable() {
  static const std::vector<AxiomSpec> table = {
      {"add.associative", AxiomGroup::Module, {C, C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return S.add(S.add(x[0], x[1]), x[2]) == S.add(x[0], S.add(x[1], x[2]));
       }},
      {"add.commutative", AxiomGroup::Module, {C, C}, false,
       [](const SystemDescriptor& S, const Args& x) { return S.add(x[0], x[1]) == S.add(x[1], x[0]); }},
      {"add.identity", AxiomGroup::Module, {C}, false,
       [](const SystemDescriptor& S, const Args& x) { return S.add(S.zero, x[0]) == x[0]; }},
      {"scalar.distributive", AxiomGroup::Module, {T, C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return S.mul(x[0], S.add(x[1], x[2])) == S.add(S.mul(x[0], x[1]), S.mul(x[0], x[2]));
       }},
      {"scalar.associative", AxiomGroup::Module, {T, T, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return S.mul(S.mul(x[0], x[1]), x[2]) == S.mul(x[0], S.mul(x[1], x[2]));
       }},
      {"scalar.annihilates_zero", AxiomGroup::Module, {T}, false,
       [](const SystemDescriptor& S, const Args& x) { return S.mul(x[0], S.zero) == S.zero; }},
      {"scalar.unit_acts_trivially", AxiomGroup::Module, {C}, true,
       [](const SystemDescriptor& S, const Args& x) { return S.mul(S.unit(), x[0]) == x[0]; }},
      {"negation.involution", AxiomGroup::Negation, {C}, false,
       [](const SystemDescriptor& S, const Args& x) { return S.negate(S.negate(x[0])) == x[0]; }},
      {"negation.additive", AxiomGroup::Negation, {C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return S.negate(S.add(x[0], x[1])) == S.add(S.negate(x[0]), S.negate(x[1]));
       }},
      {"negation.preserves_tangibles", AxiomGroup::Negation, {T}, false,
       [](const SystemDescriptor& S, const Args& x) { return S.isTangible(S.negate(x[0])); }},
      {"negation.scalar_compatible", AxiomGroup::Negation, {T, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         Element lhs = S.negate(S.mul(x[0], x[1]));
         return lhs == S.mul(S.negate(x[0]), x[1]) && lhs == S.mul(x[0], S.negate(x[1]));
       }},
      {"triple.tangibles_not_quasi_zero", AxiomGroup::Triple, {T}, false,
       [](const SystemDescriptor& S, const Args& x) { return !S.isQuasiZero(x[0]); }},
      {"triple.tangibles_generate", AxiomGroup::Triple, {C}, false,
       [](const SystemDescriptor& S, const Args& x) { return heightOf(S, x[0]).has_value(); }},
      {"surpassing.reflexive", AxiomGroup::Surpassing, {C}, false,
       [](const SystemDescriptor& S, const Args& x) { return S.preceq(x[0], x[0]); }},
      {"surpassing.antisymmetric", AxiomGroup::Surpassing, {C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return !(S.preceq(x[0], x[1]) && S.preceq(x[1], x[0])) || x[0] == x[1];
       }},
      {"surpassing.transitive", AxiomGroup::Surpassing, {C, C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return !(S.preceq(x[0], x[1]) && S.preceq(x[1], x[2])) || S.preceq(x[0], x[2]);
       }},
      {"surpassing.add_compatible", AxiomGroup::Surpassing, {C, C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return !S.preceq(x[0], x[1]) || S.preceq(S.add(x[0], x[2]), S.add(x[1], x[2]));
       }},
      {"surpassing.scalar_compatible", AxiomGroup::Surpassing, {T, C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return !S.preceq(x[1], x[2]) || S.preceq(S.mul(x[0], x[1]), S.mul(x[0], x[2]));
       }},
      {"surpassing.negation_compatible", AxiomGroup::Surpassing, {C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return !S.preceq(x[0], x[1]) || S.preceq(S.negate(x[0]), S.negate(x[1]));
       }},
      {"surpassing.contains_circ", AxiomGroup::Surpassing, {C, C}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return S.preceq(x[0], S.add(x[0], quasiZero(S, x[1])));
       }},
      {"surpassing.crucial", AxiomGroup::Surpassing, {T, T}, false,
       [](const SystemDescriptor& S, const Args& x) {
         return !S.preceq(S.zero, S.add(x[0], x[1])) || x[1] == S.negate(x[0]);
       }},
      {"interpretation.uniquely_negated", AxiomGroup::Interpretation, {T}, false,
       [](const SystemDescriptor& S, const Args& x) {
         auto tangibles = S.tangibles();
         return std::count_if(tangibles.begin(), tangibles.end(),
                              [&](const Element& b) { return S.isQuasiZero(S.add(x[0], b)); }) == 1;
       }},
  };
  return table;
}

const AxiomSpec& lookup(std::string_view name) {
  for (const auto& spec : axiomTable())
    if (spec.name == name) return spec;
  throw PreconditionError("unknown axiom '" + std::string(name) + "'");
}

AxiomCheck runAxiom(const SystemDescriptor& S, const AxiomSpec& spec, const std::vector<Element>& tangibles) {
  AxiomCheck out;
  out.name = std::string(spec.name);
  out.group = spec.group;
  const auto& carrier = S.domain();
  const std::size_t k = spec.args.size();
  std::vector<const std::vector<Element>*> ranges(k);
  for (std::size_t i = 0; i < k; ++i) ranges[i] = spec.args[i] == Range::Carrier ? &carrier : &tangibles;
  for (const auto* r : ranges)
    if (r->empty()) return out;
  std::vector<std::size_t> idx(k, 0);
  Args tuple(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = (*ranges[i])[idx[i]];
    ++out.tuplesChecked;
    if (!spec.holds(S, tuple)) {
      out.passed = false;
      out.counterexample = tuple;
      return out;
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < ranges[pos]->size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

bool groupPassed(const AxiomReport& r, AxiomGroup g) {
  return std::all_of(r.checks.begin(), r.checks.end(),
                     [&](const AxiomCheck& c) { return c.group != g || c.passed; });
}

}  // namespace

std::vector<std::string> axiomNames() {
  std::vector<std::string> out;
  for (const auto& spec : axiomTable()) out.emplace_back(spec.name);
  return out;
}

bool recheck(const SystemDescriptor& S, std::string_view axiom, const std::vector<Element>& tuple) {
  const AxiomSpec& spec = lookup(axiom);
  if (tuple.size() != spec.args.size())
    throw PreconditionError("axiom " + std::string(axiom) + " takes " + std::to_string(spec.args.size()) +
                            " elements");
  return spec.holds(S, tuple);
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool AxiomReport::allPassed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string AxiomReport::classification() const {
  if (isTrivial) return "trivial";
  if (isSystem) return "system";
  if (isTriple) return "triple";
  if (isPseudoTriple) return "pseudo-triple";
  if (isTModule) return "T-module";
  return "none";
}

AxiomReport auditAxioms(const SystemDescriptor& S) {
  AxiomReport r;
  r.system = S.name;
  r.sampled = !S.finite();
  r.domainSize = S.domain().size();
  auto tangibles = S.tangibles();
  for (const auto& spec : axiomTable()) {
    if (spec.needsUnit && !S.unital()) continue;
    r.checks.push_back(runAxiom(S, spec, tangibles));
  }

  r.isTrivial = S.domain().size() == 1 && S.domain().front() == S.zero;
  r.isTModule = groupPassed(r, AxiomGroup::Module);
  bool negation = groupPassed(r, AxiomGroup::Negation);
  const AxiomCheck* disjoint = r.find("triple.tangibles_not_quasi_zero");
  const AxiomCheck* generate = r.find("triple.tangibles_generate");
  bool nonTrivial = !r.isTrivial && !tangibles.empty();
  r.isPseudoTriple = nonTrivial && r.isTModule && negation && disjoint->passed;
  r.isTriple = r.isPseudoTriple && generate->passed;
  r.isSystem = r.isTriple && groupPassed(r, AxiomGroup::Surpassing);

  r.isMetaTangible = nonTrivial && isMetaTangible(S);
  r.isMinusBipotent = nonTrivial && isMinusBipotent(S);
  if (nonTrivial) {
    r.isReversible = checkReversibility(S).holds;
    r.isUniquelyNegated = r.find("interpretation.uniquely_negated")->passed;
    r.negationKind = negationKind(S).kind;
  }
  r.characteristic = characteristic(S);

  std::size_t maxHeight = 0;
  bool allFound = true;
  for (const auto& x : S.domain()) {
    auto h = heightOf(S, x);
    if (!h) {
      allFound = false;
      break;
    }
    maxHeight = std::max(maxHeight, *h);
  }
  if (allFound) r.maxHeightObserved = maxHeight;
  return r;
}

}  // namespace systema
