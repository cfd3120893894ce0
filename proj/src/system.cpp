#include "systema/system.hpp"

#include <algorithm>
#include <set>

#include "systema/errors.hpp"

namespace systema {

std::string_view toString(NegationKind kind) {
  switch (kind) {
    case NegationKind::First: return "first";
    case NegationKind::Second: return "second";
    case NegationKind::Mixed: return "mixed";
  }
  return "?";
}

OrderedMonoidSpec::Product OrderedMonoidSpec::product(const Rational& a, const Rational& b) const {
  Rational s = a + b;
  if (domain == Domain::Chain && s > Rational(top)) return {Rational(top), true};
  return {s, false};
}

bool OrderedMonoidSpec::dominates(const Rational& a, const Rational& b) const {
  return orientation == Orientation::Max ? a > b : a < b;
}

std::optional<Rational> OrderedMonoidSpec::inverse(const Rational& a) const {
  if (domain == Domain::Chain) {
    if (a.isZero()) return a;
    return std::nullopt;
  }
  return -a;
}

std::vector<Element> SystemDescriptor::tangibles() const {
  std::vector<Element> out;
  for (const auto& e : domain())
    if (isTangible(e)) out.push_back(e);
  return out;
}

const Element& SystemDescriptor::unit() const {
  if (!one) throw PreconditionError("system " + name + " is not unital");
  return *one;
}

System finalize(SystemDescriptor d) {
  if (d.elements) {
    auto& el = *d.elements;
    std::sort(el.begin(), el.end());
    el.erase(std::unique(el.begin(), el.end()), el.end());
    std::vector<Element> quasi;
    for (const auto& c : el) quasi.push_back(d.add(c, d.negate(c)));
    std::sort(quasi.begin(), quasi.end());
    quasi.erase(std::unique(quasi.begin(), quasi.end()), quasi.end());
    if (!d.isQuasiZero) {
      d.isQuasiZero = [quasi](const Element& x) { return std::binary_search(quasi.begin(), quasi.end(), x); };
    }
    if (!d.preceqCirc) {
      auto add = d.add;
      d.preceqCirc = [quasi, add](const Element& x, const Element& y) {
        return std::any_of(quasi.begin(), quasi.end(), [&](const Element& q) { return add(x, q) == y; });
      };
    }
  } else {
    std::sort(d.probe.begin(), d.probe.end());
    d.probe.erase(std::unique(d.probe.begin(), d.probe.end()), d.probe.end());
    if (!d.isQuasiZero || !d.preceqCirc)
      throw PreconditionError("infinite system " + d.name + " must supply isQuasiZero and preceqCirc");
  }
  if (!d.preceq) d.preceq = d.preceqCirc;
  if (!d.inverse) d.inverse = [](const Element&) { return std::optional<Element>{}; };
  return std::make_shared<const SystemDescriptor>(std::move(d));
}

void requireSameSystem(const System& a, const System& b) {
  if (a != b && (!a || !b || a->name != b->name))
    throw PreconditionError("system mismatch: " + (a ? a->name : "<none>") + " vs " + (b ? b->name : "<none>"));
}

}  // namespace systema
