#include "systema/instances.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>

#include "systema/core.hpp"
#include "systema/errors.hpp"

namespace systema {
namespace {

const Element kExtZero = Extended{true, Rational(0)};
const Element kLayerZero = Layered{Layered::Layer::Zero, Rational(0)};

Element ext(const Rational& v) { return Extended{false, v}; }
Element tangible(const Rational& v) { return Layered{Layered::Layer::Tangible, v}; }
Element ghost(const Rational& v) { return Layered{Layered::Layer::Ghost, v}; }

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void badToken(const std::string& system, std::string_view token) {
  throw std::invalid_argument("'" + std::string(token) + "' is not an element of " + system);
}

// ---------------------------------------------------------------------------
// Bipotent ordered-monoid bases

struct NumericStyle {
  std::string zeroToken;
  bool boolean = false;  // the single value 0 prints as "1"
};

System makeNumeric(std::string name, OrderedMonoidSpec m, NumericStyle style) {
  SystemDescriptor d;
  d.name = std::move(name);
  d.family = Family::Numeric;
  d.monoid = m;
  d.zero = kExtZero;
  d.one = ext(Rational(0));
  d.add = [m](const Element& x, const Element& y) {
    const auto& a = x.as<Extended>();
    const auto& b = y.as<Extended>();
    if (a.isZero) return y;
    if (b.isZero) return x;
    return m.dominates(b.value, a.value) ? y : x;
  };
  d.mul = [m](const Element& x, const Element& y) {
    const auto& a = x.as<Extended>();
    const auto& b = y.as<Extended>();
    if (a.isZero || b.isZero) return kExtZero;
    return ext(m.product(a.value, b.value).value);
  };
  d.negate = [](const Element& x) { return x; };
  d.isTangible = [](const Element& x) { return !x.as<Extended>().isZero; };
  d.isQuasiZero = [](const Element&) { return true; };  // b + b = b
  d.preceqCirc = [m](const Element& x, const Element& y) {
    const auto& a = x.as<Extended>();
    const auto& b = y.as<Extended>();
    return x == y || (!b.isZero && (a.isZero || m.dominates(b.value, a.value)));
  };
  d.inverse = [m](const Element& x) -> std::optional<Element> {
    const auto& a = x.as<Extended>();
    if (a.isZero) return std::nullopt;
    auto inv = m.inverse(a.value);
    if (!inv) return std::nullopt;
    return ext(*inv);
  };
  d.format = [style](const Element& x) {
    const auto& a = x.as<Extended>();
    if (a.isZero) return style.zeroToken;
    if (style.boolean) return std::string("1");
    return a.value.str();
  };
  d.parse = [style, m, name = d.name](std::string_view token) -> Element {
    std::string t = trim(token);
    if (t == style.zeroToken) return kExtZero;
    if (style.boolean) {
      if (t == "1") return ext(Rational(0));
      badToken(name, token);
    }
    Rational v = Rational::parse(t);
    if (m.domain == OrderedMonoidSpec::Domain::Chain &&
        (!v.isInteger() || v < Rational(0) || v > Rational(m.top)))
      badToken(name, token);
    return ext(v);
  };
  if (m.domain == OrderedMonoidSpec::Domain::Chain) {
    std::vector<Element> all{kExtZero};
    for (std::int64_t v = 0; v <= m.top; ++v) all.push_back(ext(Rational(v)));
    d.elements = all;
  } else {
    d.probe = {kExtZero, ext(Rational(1, 2)), ext(Rational(-5, 2))};
    for (std::int64_t v = -3; v <= 3; ++v) d.probe.push_back(ext(Rational(v)));
  }
  d.tangibleWindow = [m](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (m.domain == OrderedMonoidSpec::Domain::Chain && (v < 0 || v > m.top)) continue;
      out.push_back(ext(Rational(v)));
    }
    return out;
  };
  d.flags = {false, false, NegationKind::First};
  return finalize(std::move(d));
}

// ---------------------------------------------------------------------------
// Finite hyperfields and their power sets

struct Hyperfield {
  std::string name;
  std::vector<std::string> pointTokens;         // point 0 is the hyperfield zero
  std::vector<std::vector<std::uint32_t>> sum;  // hypersum as a bitmask of points
  std::vector<std::vector<int>> prod;
  std::vector<int> neg;
  std::map<std::uint32_t, std::string> setTokens;  // overrides for non-singleton sets
};

System makePowerSet(const Hyperfield& h) {
  const std::size_t n = h.pointTokens.size();
  auto setSum = [h, n](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1)
        for (std::size_t j = 0; j < n; ++j)
          if (b >> j & 1) out |= h.sum[i][j];
    return out;
  };
  auto setProd = [h, n](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1)
        for (std::size_t j = 0; j < n; ++j)
          if (b >> j & 1) out |= 1u << h.prod[i][j];
    return out;
  };
  auto setNeg = [h, n](std::uint32_t a) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1) out |= 1u << h.neg[i];
    return out;
  };
  auto bits = [](const Element& x) { return x.as<PointSet>().bits; };

  SystemDescriptor d;
  d.name = h.name;
  d.family = Family::FiniteHyperfield;
  d.zero = PointSet{1u};
  d.one = PointSet{1u << 1};
  d.add = [setSum, bits](const Element& x, const Element& y) -> Element { return PointSet{setSum(bits(x), bits(y))}; };
  d.mul = [setProd, bits](const Element& x, const Element& y) -> Element {
    return PointSet{setProd(bits(x), bits(y))};
  };
  d.negate = [setNeg, bits](const Element& x) -> Element { return PointSet{setNeg(bits(x))}; };
  d.isTangible = [bits](const Element& x) { return std::popcount(bits(x)) == 1 && bits(x) != 1u; };
  d.preceq = [bits](const Element& x, const Element& y) { return (bits(x) & ~bits(y)) == 0; };
  d.inverse = [h, n, bits](const Element& x) -> std::optional<Element> {
    std::uint32_t b = bits(x);
    if (std::popcount(b) != 1 || b == 1u) return std::nullopt;
    int p = std::countr_zero(b);
    for (std::size_t q = 1; q < n; ++q)
      if (h.prod[p][q] == 1) return Element(PointSet{1u << q});
    return std::nullopt;
  };
  auto fmt = [h, n](const Element& x) {
    std::uint32_t b = x.as<PointSet>().bits;
    if (auto it = h.setTokens.find(b); it != h.setTokens.end()) return it->second;
    if (std::popcount(b) == 1) return h.pointTokens[std::countr_zero(b)];
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (b >> i & 1) {
        if (!first) out += ",";
        out += h.pointTokens[i];
        first = false;
      }
    return out + "}";
  };
  d.format = fmt;

  // Carrier: closure of the singletons under + and ·.
  std::set<std::uint32_t> carrier;
  for (std::size_t i = 0; i < n; ++i) carrier.insert(1u << i);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint32_t> cur(carrier.begin(), carrier.end());
    for (auto a : cur)
      for (auto b : cur) {
        grew |= carrier.insert(setSum(a, b)).second;
        grew |= carrier.insert(setProd(a, b)).second;
      }
  }
  std::vector<Element> elements;
  for (auto b : carrier) elements.push_back(PointSet{b});
  d.elements = elements;
  d.parse = [elements, fmt, name = h.name](std::string_view token) -> Element {
    std::string t = trim(token);
    for (const auto& e : elements)
      if (fmt(e) == t) return e;
    badToken(name, token);
  };
  d.flags = {true, false, std::nullopt};
  return finalize(std::move(d));
}

// ---------------------------------------------------------------------------
// Supertropical and symmetrized transformers

std::vector<Element> supertropicalValues(const SystemDescriptor& base) {
  std::vector<Element> out;
  if (base.finite()) {
    for (const auto& x : *base.elements)
      if (!x.as<Extended>().isZero) out.push_back(x);
  } else {
    for (Rational v : {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(3), Rational(1, 2)})
      out.push_back(ext(v));
  }
  return out;
}

}  // namespace

System makeBoolean() {
  OrderedMonoidSpec m;
  m.domain = OrderedMonoidSpec::Domain::Chain;
  m.top = 0;
  return makeNumeric("boolean", m, {"0", true});
}

System makeMaxPlusRational() { return makeNumeric("maxplus", OrderedMonoidSpec{}, {"-inf", false}); }

System makeMinPlusRational() {
  OrderedMonoidSpec m;
  m.orientation = Orientation::Min;
  return makeNumeric("minplus", m, {"inf", false});
}

System makeFiniteChain(std::int64_t m) {
  if (m < 1) throw PreconditionError("chain needs m >= 1");
  OrderedMonoidSpec spec;
  spec.domain = OrderedMonoidSpec::Domain::Chain;
  spec.top = m;
  return makeNumeric("chain:" + std::to_string(m), spec, {"-inf", false});
}

System supertropicalize(const System& base) {
  if (!base || base->family != Family::Numeric || !base->monoid)
    throw PreconditionError("supertropicalize needs a bipotent ordered-monoid base");
  const OrderedMonoidSpec m = *base->monoid;
  using L = Layered::Layer;

  SystemDescriptor d;
  d.name = "supertropical:" + base->name;
  d.family = Family::Supertropical;
  d.base = base;
  d.monoid = m;
  d.zero = kLayerZero;
  d.one = tangible(Rational(0));
  d.add = [m](const Element& x, const Element& y) -> Element {
    const auto& a = x.as<Layered>();
    const auto& b = y.as<Layered>();
    if (a.layer == L::Zero) return y;
    if (b.layer == L::Zero) return x;
    if (a.value == b.value) return ghost(a.value);
    return m.dominates(a.value, b.value) ? x : y;
  };
  d.mul = [m](const Element& x, const Element& y) -> Element {
    const auto& a = x.as<Layered>();
    const auto& b = y.as<Layered>();
    if (a.layer == L::Zero || b.layer == L::Zero) return kLayerZero;
    auto p = m.product(a.value, b.value);
    bool isGhost = a.layer == L::Ghost || b.layer == L::Ghost || p.saturated;
    return isGhost ? ghost(p.value) : tangible(p.value);
  };
  d.negate = [](const Element& x) { return x; };
  d.isTangible = [](const Element& x) { return x.as<Layered>().layer == L::Tangible; };
  d.isQuasiZero = [](const Element& x) { return x.as<Layered>().layer != L::Tangible; };
  d.preceqCirc = [m](const Element& x, const Element& y) {
    const auto& a = x.as<Layered>();
    const auto& b = y.as<Layered>();
    if (x == y) return true;
    if (b.layer != L::Ghost) return false;
    return a.layer == L::Zero || !m.dominates(a.value, b.value);
  };
  d.inverse = [m](const Element& x) -> std::optional<Element> {
    const auto& a = x.as<Layered>();
    if (a.layer != L::Tangible) return std::nullopt;
    auto inv = m.inverse(a.value);
    if (!inv) return std::nullopt;
    return tangible(*inv);
  };
  d.format = [base](const Element& x) {
    const auto& a = x.as<Layered>();
    switch (a.layer) {
      case L::Zero: return base->format(base->zero);
      case L::Tangible: return base->format(ext(a.value));
      case L::Ghost: return base->format(ext(a.value)) + "v";
    }
    return std::string("?");
  };
  d.parse = [base, name = d.name](std::string_view token) -> Element {
    std::string t = trim(token);
    bool isGhost = !t.empty() && t.back() == 'v';
    if (isGhost) t.pop_back();
    Element b;
    try {
      b = base->parse(t);
    } catch (const std::invalid_argument&) {
      badToken(name, token);
    }
    const auto& e = b.as<Extended>();
    if (e.isZero) {
      if (isGhost) badToken(name, token);
      return kLayerZero;
    }
    return isGhost ? ghost(e.value) : tangible(e.value);
  };
  auto values = supertropicalValues(*base);
  std::vector<Element> all{kLayerZero};
  for (const auto& v : values) {
    all.push_back(tangible(v.as<Extended>().value));
    all.push_back(ghost(v.as<Extended>().value));
  }
  if (base->finite())
    d.elements = all;
  else
    d.probe = all;
  d.tangibleWindow = [base](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (const auto& v : base->tangibleWindow(lo, hi)) out.push_back(tangible(v.as<Extended>().value));
    return out;
  };
  d.flags = {true, false, NegationKind::First};
  return finalize(std::move(d));
}

System symmetrize(const System& base) {
  if (!base) throw PreconditionError("symmetrize needs a base");
  if (!base->finite() && base->family != Family::Numeric)
    throw PreconditionError("symmetrize needs a finite or bipotent base");

  SystemDescriptor d;
  d.name = "symmetrized:" + base->name;
  d.family = Family::Symmetrized;
  d.base = base;
  d.zero = makePair(base->zero, base->zero);
  if (base->one) d.one = makePair(*base->one, base->zero);
  auto parts = [](const Element& x) -> const std::vector<Element>& { return x.as<Pair>().parts; };
  d.add = [base, parts](const Element& x, const Element& y) {
    const auto& a = parts(x);
    const auto& b = parts(y);
    return makePair(base->add(a[0], b[0]), base->add(a[1], b[1]));
  };
  d.mul = [base, parts](const Element& x, const Element& y) {
    const auto& a = parts(x);
    const auto& b = parts(y);
    const auto& B = *base;
    return makePair(B.add(B.mul(a[0], b[0]), B.mul(a[1], b[1])), B.add(B.mul(a[0], b[1]), B.mul(a[1], b[0])));
  };
  d.negate = [parts](const Element& x) { return makePair(parts(x)[1], parts(x)[0]); };
  d.isTangible = [base, parts](const Element& x) {
    const auto& a = parts(x);
    bool z0 = a[0] == base->zero;
    bool z1 = a[1] == base->zero;
    return z0 != z1 && base->isTangible(z0 ? a[1] : a[0]);
  };
  d.isQuasiZero = [parts](const Element& x) { return parts(x)[0] == parts(x)[1]; };
  // y = x + (c, c); for a bipotent base only c ∈ {𝟘, y₀, y₁} can matter.
  d.preceqCirc = [base, parts](const Element& x, const Element& y) {
    const auto& a = parts(x);
    const auto& b = parts(y);
    auto fits = [&](const Element& c) { return base->add(a[0], c) == b[0] && base->add(a[1], c) == b[1]; };
    if (base->finite()) return std::any_of(base->elements->begin(), base->elements->end(), fits);
    return fits(base->zero) || fits(b[0]) || fits(b[1]);
  };
  d.inverse = [base, parts](const Element& x) -> std::optional<Element> {
    const auto& a = parts(x);
    bool z0 = a[0] == base->zero;
    auto inv = base->inverse(z0 ? a[1] : a[0]);
    if (!inv) return std::nullopt;
    return z0 ? makePair(base->zero, *inv) : makePair(*inv, base->zero);
  };
  d.format = [base, parts](const Element& x) {
    return "(" + base->format(parts(x)[0]) + "," + base->format(parts(x)[1]) + ")";
  };
  d.parse = [base, name = d.name](std::string_view token) -> Element {
    std::string t = trim(token);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') badToken(name, token);
    std::string_view body(t);
    body = body.substr(1, body.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (c == ',' && depth == 0) {
        try {
          return makePair(base->parse(body.substr(0, i)), base->parse(body.substr(i + 1)));
        } catch (const std::invalid_argument&) {
          badToken(name, token);
        }
      }
    }
    badToken(name, token);
  };
  std::vector<Element> components;
  if (base->finite()) {
    components = *base->elements;
  } else {
    components = base->tangibleWindow(0, 2);
    components.insert(components.begin(), base->zero);
  }
  std::vector<Element> all;
  for (const auto& a : components)
    for (const auto& b : components) all.push_back(makePair(a, b));
  if (base->finite())
    d.elements = all;
  else
    d.probe = all;
  if (base->tangibleWindow) d.tangibleWindow = [base](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (const auto& v : base->tangibleWindow(lo, hi)) {
      out.push_back(makePair(v, base->zero));
      out.push_back(makePair(base->zero, v));
    }
    return out;
  };
  d.flags = {true, false, NegationKind::Second};
  return finalize(std::move(d));
}

System makeKrasner() {
  Hyperfield h;
  h.name = "krasner";
  h.pointTokens = {"0", "1"};
  h.sum = {{0b01, 0b10}, {0b10, 0b11}};
  h.prod = {{0, 0}, {0, 1}};
  h.neg = {0, 1};
  h.setTokens = {{0b11, "T"}};
  return makePowerSet(h);
}

System makeSign() {
  Hyperfield h;
  h.name = "sign";
  h.pointTokens = {"0", "+", "-"};
  h.sum = {{0b001, 0b010, 0b100}, {0b010, 0b010, 0b111}, {0b100, 0b111, 0b100}};
  h.prod = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  h.neg = {0, 2, 1};
  h.setTokens = {{0b111, "T"}};
  return makePowerSet(h);
}

System makeTropicalHyperfield() {
  using K = TropicalSet::Kind;
  auto point = [](const Rational& v) -> Element { return TropicalSet{K::Point, v}; };
  auto ray = [](const Rational& v) -> Element { return TropicalSet{K::Ray, v}; };
  const Element zero = TropicalSet{K::Zero, Rational(0)};

  SystemDescriptor d;
  d.name = "trophf";
  d.family = Family::TropicalHyperfield;
  d.zero = zero;
  d.one = point(Rational(0));
  d.add = [ray](const Element& x, const Element& y) -> Element {
    const auto& a = x.as<TropicalSet>();
    const auto& b = y.as<TropicalSet>();
    if (a.kind == K::Zero) return y;
    if (b.kind == K::Zero) return x;
    if (a.kind == K::Point && b.kind == K::Point) {
      if (a.value == b.value) return ray(a.value);
      return a.value > b.value ? x : y;
    }
    if (a.kind == K::Ray && b.kind == K::Ray) return a.value >= b.value ? x : y;
    const auto& p = a.kind == K::Point ? a : b;
    const auto& r = a.kind == K::Point ? b : a;
    return p.value > r.value ? Element(p) : Element(r);
  };
  d.mul = [zero](const Element& x, const Element& y) -> Element {
    const auto& a = x.as<TropicalSet>();
    const auto& b = y.as<TropicalSet>();
    if (a.kind == K::Zero || b.kind == K::Zero) return zero;
    K kind = a.kind == K::Ray || b.kind == K::Ray ? K::Ray : K::Point;
    return TropicalSet{kind, a.value + b.value};
  };
  d.negate = [](const Element& x) { return x; };
  d.isTangible = [](const Element& x) { return x.as<TropicalSet>().kind == K::Point; };
  d.isQuasiZero = [](const Element& x) { return x.as<TropicalSet>().kind != K::Point; };
  auto subset = [](const Element& x, const Element& y) {
    const auto& a = x.as<TropicalSet>();
    const auto& b = y.as<TropicalSet>();
    if (x == y) return true;
    return b.kind == K::Ray && (a.kind == K::Zero || a.value <= b.value);
  };
  d.preceq = subset;
  d.preceqCirc = subset;  // x ⊞ c∘ ranges over the rays above x
  d.inverse = [point](const Element& x) -> std::optional<Element> {
    const auto& a = x.as<TropicalSet>();
    if (a.kind != K::Point) return std::nullopt;
    return point(-a.value);
  };
  d.format = [](const Element& x) {
    const auto& a = x.as<TropicalSet>();
    switch (a.kind) {
      case K::Zero: return std::string("-inf");
      case K::Point: return a.value.str();
      case K::Ray: return "[-inf," + a.value.str() + "]";
    }
    return std::string("?");
  };
  d.parse = [zero, point, ray](std::string_view token) -> Element {
    std::string t = trim(token);
    if (t == "-inf") return zero;
    const std::string prefix = "[-inf,";
    if (t.size() > prefix.size() && t.compare(0, prefix.size(), prefix) == 0 && t.back() == ']')
      return ray(Rational::parse(std::string_view(t).substr(prefix.size(), t.size() - prefix.size() - 1)));
    return point(Rational::parse(t));
  };
  d.probe = {zero, point(Rational(1, 2)), ray(Rational(1, 2))};
  for (std::int64_t v = -1; v <= 2; ++v) {
    d.probe.push_back(point(Rational(v)));
    d.probe.push_back(ray(Rational(v)));
  }
  d.tangibleWindow = [point](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(point(Rational(v)));
    return out;
  };
  d.flags = {true, false, NegationKind::First};
  return finalize(std::move(d));
}

System makePhase() {
  auto ps = [](const Element& x) -> const PhaseSet& { return x.as<PhaseSet>(); };
  SystemDescriptor d;
  d.name = "phase";
  d.family = Family::Phase;
  d.zero = PhaseSet::zero();
  d.one = PhaseSet::point(Rational(0));
  d.add = [ps](const Element& x, const Element& y) -> Element { return ps(x).hyperSum(ps(y)); };
  d.mul = [ps](const Element& x, const Element& y) -> Element { return ps(x).product(ps(y)); };
  d.negate = [ps](const Element& x) -> Element { return ps(x).negate(); };
  d.isTangible = [ps](const Element& x) { return ps(x).isSinglePoint(); };
  // Necessary conditions for being c ⊞ (-c); every quasi-zero satisfies them.
  d.isQuasiZero = [ps](const Element& x) { return ps(x).containsZero() && ps(x).negate() == ps(x); };
  d.preceq = [ps](const Element& x, const Element& y) { return ps(x).subsetOf(ps(y)); };
  d.inverse = [ps](const Element& x) -> std::optional<Element> {
    if (!ps(x).isSinglePoint()) return std::nullopt;
    return PhaseSet::point(-ps(x).breaks().front().angle);
  };
  d.format = [ps](const Element& x) { return ps(x).str(); };
  d.parse = [](std::string_view token) -> Element { return PhaseSet::parse(trim(token)); };
  const Rational q(1, 4), h(1, 2);
  d.probe = {
      PhaseSet::zero(),
      PhaseSet::point(Rational(0)),
      PhaseSet::point(Rational(1, 8)),
      PhaseSet::point(Rational(5, 8)),
      PhaseSet::point(q),
      PhaseSet::point(h),
      PhaseSet::point(Rational(3, 4)),
      PhaseSet::openArc(Rational(0), q),
      PhaseSet::openArc(Rational(0), h),
      PhaseSet::point(Rational(0)).hyperSum(PhaseSet::point(h)),
      PhaseSet::circle(true),
      PhaseSet::circle(false),
      PhaseSet::point(Rational(0)).unite(PhaseSet::point(q)),
  };
  // Searched over the probe set plus the two arguments.
  std::vector<Element> witnesses = d.probe;
  d.preceqCirc = [ps, witnesses](const Element& x, const Element& y) {
    auto fits = [&](const Element& c) {
      return ps(x).hyperSum(ps(c).hyperSum(ps(c).negate())) == ps(y);
    };
    return x == y || fits(x) || fits(y) || std::any_of(witnesses.begin(), witnesses.end(), fits);
  };
  d.tangibleWindow = [](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (std::int64_t k = lo; k <= hi; ++k) out.push_back(PhaseSet::point(Rational(k, 8)));
    return out;
  };
  d.flags = {false, true, NegationKind::Second};
  return finalize(std::move(d));
}

System makeFuzzyNegation(const System& base, const Element& onePrime) {
  if (!base || !base->finite()) throw PreconditionError("fuzzy negation needs a finite base");
  if (!base->unital()) throw PreconditionError("fuzzy negation needs a unital base");
  if (!base->isTangible(onePrime)) throw PreconditionError("1' must be tangible");
  if (base->mul(onePrime, onePrime) != base->unit()) throw PreconditionError("1' must square to 1");
  SystemDescriptor d = *base;
  d.name = base->name + "~fuzzy(" + base->format(onePrime) + ")";
  d.family = Family::Custom;
  d.base = base;
  auto mul = base->mul;
  d.negate = [mul, onePrime](const Element& x) { return mul(onePrime, x); };
  d.isQuasiZero = nullptr;
  d.preceqCirc = nullptr;
  d.preceq = nullptr;
  d.flags = {};
  System draft = finalize(d);
  AxiomReport report = auditAxioms(*draft);
  d.flags.isTriple = report.isTriple;
  d.flags.isPseudoTripleOnly = report.isPseudoTriple && !report.isTriple;
  d.flags.negationKindHint = report.negationKind;
  d.isQuasiZero = nullptr;
  d.preceqCirc = nullptr;
  d.preceq = nullptr;
  return finalize(std::move(d));
}

System makeIntegers() {
  auto num = [](const Element& x) -> const Rational& { return x.as<Classical>().value; };
  SystemDescriptor d;
  d.name = "integers";
  d.family = Family::Classical;
  d.zero = Classical{Rational(0)};
  d.one = Classical{Rational(1)};
  d.add = [num](const Element& x, const Element& y) -> Element { return Classical{num(x) + num(y)}; };
  d.mul = [num](const Element& x, const Element& y) -> Element { return Classical{num(x) * num(y)}; };
  d.negate = [num](const Element& x) -> Element { return Classical{-num(x)}; };
  d.isTangible = [num](const Element& x) { return !num(x).isZero(); };
  d.isQuasiZero = [num](const Element& x) { return num(x).isZero(); };
  d.preceqCirc = [](const Element& x, const Element& y) { return x == y; };
  d.inverse = [num](const Element& x) -> std::optional<Element> {
    if (num(x) == Rational(1) || num(x) == Rational(-1)) return x;
    return std::nullopt;
  };
  d.format = [num](const Element& x) { return num(x).str(); };
  d.parse = [](std::string_view token) -> Element {
    Rational v = Rational::parse(trim(token));
    if (!v.isInteger()) badToken("integers", token);
    return Classical{v};
  };
  for (std::int64_t v = -3; v <= 3; ++v) d.probe.push_back(Classical{Rational(v)});
  d.tangibleWindow = [](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (std::int64_t v = lo; v <= hi; ++v)
      if (v != 0) out.push_back(Classical{Rational(v)});
    return out;
  };
  d.flags = {true, false, NegationKind::Second};
  return finalize(std::move(d));
}

System makeNaturals() {
  auto num = [](const Element& x) -> const Rational& { return x.as<Classical>().value; };
  SystemDescriptor d;
  d.name = "naturals";
  d.family = Family::Classical;
  d.zero = Classical{Rational(0)};
  d.one = Classical{Rational(1)};
  d.add = [num](const Element& x, const Element& y) -> Element { return Classical{num(x) + num(y)}; };
  d.mul = [num](const Element& x, const Element& y) -> Element { return Classical{num(x) * num(y)}; };
  d.negate = [](const Element& x) { return x; };
  d.isTangible = [num](const Element& x) { return !num(x).isZero(); };
  auto even = [](const Rational& v) { return v.isInteger() && (v.toMpq().get_num() % 2) == 0; };
  d.isQuasiZero = [num, even](const Element& x) { return even(num(x)); };
  d.preceqCirc = [num, even](const Element& x, const Element& y) {
    return num(y) >= num(x) && even(num(y) - num(x));
  };
  d.format = [num](const Element& x) { return num(x).str(); };
  d.parse = [](std::string_view token) -> Element {
    Rational v = Rational::parse(trim(token));
    if (!v.isInteger() || v < Rational(0)) badToken("naturals", token);
    return Classical{v};
  };
  for (std::int64_t v = 0; v <= 5; ++v) d.probe.push_back(Classical{Rational(v)});
  d.tangibleWindow = [](std::int64_t lo, std::int64_t hi) {
    std::vector<Element> out;
    for (std::int64_t v = std::max<std::int64_t>(lo, 1); v <= hi; ++v) out.push_back(Classical{Rational(v)});
    return out;
  };
  d.flags = {false, false, NegationKind::First};
  return finalize(std::move(d));
}

namespace {

struct IsoSearch {
  const SystemDescriptor& a;
  const SystemDescriptor& b;
  const std::vector<Element>& xs;
  const std::vector<Element>& ys;
  std::map<Element, Element> f;
  std::map<Element, Element> g;  // inverse of f

  bool consistent(const Element& image, const Element& preimageOfResult) const {
    auto it = f.find(preimageOfResult);
    if (it != f.end()) return it->second == image;
    // Result not assigned yet: its image must not already belong to another element.
    return g.find(image) == g.end();
  }

  bool check(const Element& x) const {
    const Element& fx = f.at(x);
    if (!consistent(b.negate(fx), a.negate(x))) return false;
    for (const auto& [y, fy] : f) {
      if (!consistent(b.add(fx, fy), a.add(x, y))) return false;
      if (!consistent(b.mul(fx, fy), a.mul(x, y))) return false;
    }
    return true;
  }

  bool run(std::size_t i) {
    if (i == xs.size()) return true;
    const Element& x = xs[i];
    for (const auto& y : ys) {
      if (g.count(y)) continue;
      if ((x == a.zero) != (y == b.zero) || a.isTangible(x) != b.isTangible(y)) continue;
      f.emplace(x, y);
      g.emplace(y, x);
      if (check(x) && run(i + 1)) return true;
      f.erase(x);
      g.erase(y);
    }
    return false;
  }
};

}  // namespace

IsomorphismResult isomorphicFinite(const System& s1, const System& s2) {
  if (!s1->finite() || !s2->finite()) throw PreconditionError("isomorphicFinite needs finite systems");
  const auto& xs = *s1->elements;
  const auto& ys = *s2->elements;
  if (xs.size() > 12 || ys.size() > 12) throw BudgetExceeded("isomorphicFinite is limited to 12 elements");
  IsomorphismResult out;
  if (xs.size() != ys.size()) return out;
  IsoSearch search{*s1, *s2, xs, ys, {}, {}};
  if (search.run(0)) {
    // Full re-verification of the completed bijection.
    const auto& f = search.f;
    for (const auto& x : xs) {
      if (f.at(s1->negate(x)) != s2->negate(f.at(x))) return out;
      for (const auto& y : xs) {
        if (f.at(s1->add(x, y)) != s2->add(f.at(x), f.at(y))) return out;
        if (f.at(s1->mul(x, y)) != s2->mul(f.at(x), f.at(y))) return out;
      }
    }
    out.isomorphic = true;
    out.witness = f;
  }
  return out;
}

namespace {

System build(std::string_view name) {
  if (name == "boolean") return makeBoolean();
  if (name == "maxplus") return makeMaxPlusRational();
  if (name == "minplus") return makeMinPlusRational();
  if (name == "krasner") return makeKrasner();
  if (name == "sign") return makeSign();
  if (name == "trophf") return makeTropicalHyperfield();
  if (name == "phase") return makePhase();
  if (name == "integers") return makeIntegers();
  if (name == "naturals") return makeNaturals();
  auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = name.substr(0, colon);
    std::string_view rest = name.substr(colon + 1);
    if (head == "chain") {
      std::int64_t m = 0;
      try {
        Rational r = Rational::parse(rest);
        if (!r.isInteger()) throw std::invalid_argument("chain size");
        m = r.toInt64();
      } catch (const std::exception&) {
        throw PreconditionError("bad chain size in '" + std::string(name) + "'");
      }
      if (m < 1 || m > 64) throw PreconditionError("chain size must lie in 1..64");
      return makeFiniteChain(m);
    }
    if (head == "supertropical") return supertropicalize(resolveInstance(rest));
    if (head == "symmetrized") return symmetrize(resolveInstance(rest));
  }
  throw PreconditionError("unknown instance '" + std::string(name) + "'; valid: " + instanceNameHelp());
}

}  // namespace

System resolveInstance(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, System, std::less<>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
  }
  System s = build(name);
  std::lock_guard lock(mu);
  return cache.emplace(std::string(name), s).first->second;
}

std::string instanceNameHelp() {
  return "boolean, maxplus, minplus, chain:<m>, supertropical:<base>, symmetrized:<base>, krasner, sign, trophf, "
         "phase, integers, naturals";
}

}  // namespace systema
