#include "systema/phase_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace systema {
namespace {

const Rational kHalf(1, 2);

Rational wrap(const Rational& a) { return a.fractionalPart(); }

// Counter-clockwise distance from a to b, in [0, 1).
Rational ccw(const Rational& a, const Rational& b) { return wrap(b - a); }

void sortUnique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

template <class MemberFn, class AfterFn>
PhaseSet PhaseSet::build(std::vector<Rational> critical, MemberFn member, AfterFn after, bool uniformFull) {
  PhaseSet out;
  for (auto& c : critical) c = wrap(c);
  sortUnique(critical);
  if (critical.empty()) {
    out.full_ = uniformFull;
    return out;
  }
  std::vector<Break> raw;
  raw.reserve(critical.size());
  for (const auto& c : critical) raw.push_back({c, member(c), after(c)});
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool before = raw[(i + n - 1) % n].after;
    if (raw[i].point == raw[i].after && raw[i].after == before) continue;
    out.breaks_.push_back(raw[i]);
  }
  if (out.breaks_.empty()) out.full_ = raw.front().after;
  return out;
}

PhaseSet PhaseSet::zero() {
  PhaseSet s;
  s.zero_ = true;
  return s;
}

PhaseSet PhaseSet::point(const Rational& angle) {
  PhaseSet s;
  s.breaks_.push_back({wrap(angle), true, false});
  return s;
}

PhaseSet PhaseSet::openArc(const Rational& from, const Rational& to) {
  Rational len = ccw(from, to);
  if (len.isZero()) len = Rational(1);
  return fromPieces({Piece{wrap(from), len}}, false);
}

PhaseSet PhaseSet::circle(bool withZero) {
  PhaseSet s;
  s.full_ = true;
  s.zero_ = withZero;
  return s;
}

bool PhaseSet::isSinglePoint() const {
  return !zero_ && breaks_.size() == 1 && breaks_.front().point && !breaks_.front().after;
}

namespace {
template <class Breaks>
const PhaseSet::Break& governing(const Breaks& breaks, const Rational& angle) {
  auto it = std::upper_bound(breaks.begin(), breaks.end(), angle,
                             [](const Rational& a, const PhaseSet::Break& b) { return a < b.angle; });
  return it == breaks.begin() ? breaks.back() : *(it - 1);
}
}  // namespace

bool PhaseSet::contains(const Rational& angle) const {
  if (breaks_.empty()) return full_;
  Rational a = wrap(angle);
  const Break& b = governing(breaks_, a);
  return b.angle == a ? b.point : b.after;
}

bool PhaseSet::intervalAfter(const Rational& angle) const {
  if (breaks_.empty()) return full_;
  return governing(breaks_, wrap(angle)).after;
}

PhaseSet PhaseSet::fromPieces(const std::vector<Piece>& pieces, bool withZero) {
  std::vector<Rational> critical;
  for (const auto& p : pieces) {
    critical.push_back(p.from);
    if (!p.isPoint()) critical.push_back(p.from + p.length);
  }
  auto member = [&](const Rational& c) {
    for (const auto& p : pieces) {
      if (p.isPoint()) {
        if (p.from == c) return true;
      } else {
        Rational d = ccw(p.from, c);
        if (!d.isZero() && d < p.length) return true;
      }
    }
    return false;
  };
  auto after = [&](const Rational& c) {
    for (const auto& p : pieces) {
      if (!p.isPoint() && ccw(p.from, c) < p.length) return true;
    }
    return false;
  };
  PhaseSet out = build(critical, member, after, false);
  out.zero_ = withZero;
  return out;
}

PhaseSet PhaseSet::unite(const PhaseSet& other) const {
  std::vector<Rational> critical;
  for (const auto& b : breaks_) critical.push_back(b.angle);
  for (const auto& b : other.breaks_) critical.push_back(b.angle);
  PhaseSet out = build(
      critical, [&](const Rational& c) { return contains(c) || other.contains(c); },
      [&](const Rational& c) { return intervalAfter(c) || other.intervalAfter(c); }, full_ || other.full_);
  out.zero_ = zero_ || other.zero_;
  return out;
}

std::vector<PhaseSet::Piece> PhaseSet::convexPieces() const {
  std::vector<Piece> pieces;
  auto split = [&](auto&& self, const Rational& from, const Rational& len) -> void {
    if (len < kHalf) {
      pieces.push_back({wrap(from), len});
      return;
    }
    Rational mid = len * kHalf;
    self(self, from, mid);
    pieces.push_back({wrap(from + mid), Rational(0)});
    self(self, from + mid, mid);
  };
  if (breaks_.empty()) {
    if (full_) {
      pieces.push_back({Rational(0), Rational(0)});
      split(split, Rational(0), Rational(1));
    }
    return pieces;
  }
  const std::size_t n = breaks_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Break& b = breaks_[i];
    if (b.point) pieces.push_back({b.angle, Rational(0)});
    if (b.after) {
      Rational len = n == 1 ? Rational(1) : ccw(b.angle, breaks_[(i + 1) % n].angle);
      split(split, b.angle, len);
    }
  }
  return pieces;
}

PhaseSet PhaseSet::coneInterior(const std::vector<Rational>& directions) {
  std::vector<Rational> d;
  for (const auto& x : directions) d.push_back(wrap(x));
  sortUnique(d);
  if (d.size() == 1) return point(d.front());
  const std::size_t k = d.size();
  std::size_t gapAt = 0;
  Rational maxGap(-1);
  for (std::size_t i = 0; i < k; ++i) {
    Rational g = i + 1 < k ? d[i + 1] - d[i] : d.front() + Rational(1) - d.back();
    if (g > maxGap) {
      maxGap = g;
      gapAt = i;
    }
  }
  const Rational& start = d[(gapAt + 1) % k];
  if (maxGap > kHalf) return fromPieces({Piece{start, Rational(1) - maxGap}}, false);
  if (maxGap == kHalf) {
    if (k == 2) {
      PhaseSet line = point(d[0]).unite(point(d[1]));
      line.zero_ = true;
      return line;
    }
    return fromPieces({Piece{start, kHalf}}, false);
  }
  return circle(true);
}

PhaseSet PhaseSet::hyperSum(const PhaseSet& other) const {
  PhaseSet out;
  if (zero_) out = out.unite(other);
  if (other.zero_) out = out.unite(*this);
  auto mine = convexPieces();
  auto theirs = other.convexPieces();
  for (const auto& p : mine) {
    for (const auto& q : theirs) {
      std::vector<Rational> gens{p.from, q.from};
      if (!p.isPoint()) gens.push_back(p.from + p.length);
      if (!q.isPoint()) gens.push_back(q.from + q.length);
      out = out.unite(coneInterior(gens));
    }
  }
  return out;
}

PhaseSet PhaseSet::product(const PhaseSet& other) const {
  std::vector<Piece> pieces;
  for (const auto& p : convexPieces())
    for (const auto& q : other.convexPieces()) pieces.push_back({wrap(p.from + q.from), p.length + q.length});
  bool z = (zero_ && !other.empty()) || (other.zero_ && !empty());
  return fromPieces(pieces, z);
}

PhaseSet PhaseSet::rotate(const Rational& turns) const {
  PhaseSet out = *this;
  for (auto& b : out.breaks_) b.angle = wrap(b.angle + turns);
  std::sort(out.breaks_.begin(), out.breaks_.end());
  return out;
}

PhaseSet PhaseSet::negate() const { return rotate(kHalf); }

bool PhaseSet::subsetOf(const PhaseSet& other) const {
  if (zero_ && !other.zero_) return false;
  if (breaks_.empty() && other.breaks_.empty()) return !full_ || other.full_;
  std::vector<Rational> critical;
  for (const auto& b : breaks_) critical.push_back(b.angle);
  for (const auto& b : other.breaks_) critical.push_back(b.angle);
  for (const auto& c : critical) {
    if (contains(c) && !other.contains(c)) return false;
    if (intervalAfter(c) && !other.intervalAfter(c)) return false;
  }
  return true;
}

std::string PhaseSet::str() const {
  if (zero_ && breaks_.empty() && !full_) return "0";
  if (isSinglePoint()) return "@" + breaks_.front().angle.str();
  std::vector<std::string> items;
  if (zero_) items.emplace_back("0");
  if (breaks_.empty() && full_) items.emplace_back("S1");
  const std::size_t n = breaks_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Break& b = breaks_[i];
    if (b.point) items.push_back("@" + b.angle.str());
    if (b.after) items.push_back("(" + b.angle.str() + "," + breaks_[(i + 1) % n].angle.str() + ")");
  }
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ';';
    out += items[i];
  }
  return out + "}";
}

PhaseSet PhaseSet::parse(std::string_view text) {
  if (text == "0") return zero();
  if (!text.empty() && text.front() == '@') return point(Rational::parse(text.substr(1)));
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("bad phase set '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  PhaseSet out;
  while (!body.empty()) {
    auto semi = body.find(';');
    std::string_view item = body.substr(0, semi);
    body = semi == std::string_view::npos ? std::string_view{} : body.substr(semi + 1);
    if (item == "0") {
      out.zero_ = true;
    } else if (item == "S1") {
      out = out.unite(circle(false));
    } else if (!item.empty() && item.front() == '(' && item.back() == ')') {
      auto comma = item.find(',');
      if (comma == std::string_view::npos) throw std::invalid_argument("bad phase arc '" + std::string(item) + "'");
      out = out.unite(openArc(Rational::parse(item.substr(1, comma - 1)),
                              Rational::parse(item.substr(comma + 1, item.size() - comma - 2))));
    } else if (!item.empty() && item.front() == '@') {
      out = out.unite(point(Rational::parse(item.substr(1))));
    } else {
      throw std::invalid_argument("bad phase item '" + std::string(item) + "'");
    }
  }
  return out;
}

}  // namespace systema
