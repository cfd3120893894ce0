#include "systema/element.hpp"

#include <algorithm>
#include <ostream>

namespace systema {

bool Pair::operator==(const Pair& o) const { return parts == o.parts; }

std::strong_ordering Pair::operator<=>(const Pair& o) const {
  return std::lexicographical_compare_three_way(parts.begin(), parts.end(), o.parts.begin(), o.parts.end());
}

std::strong_ordering Element::operator<=>(const Element& o) const { return payload_ <=> o.payload_; }

namespace {

struct Dump {
  std::ostream& os;
  void operator()(const Extended& x) const {
    if (x.isZero)
      os << "zero";
    else
      os << x.value;
  }
  void operator()(const Layered& x) const {
    switch (x.layer) {
      case Layered::Layer::Zero: os << "zero"; break;
      case Layered::Layer::Tangible: os << x.value; break;
      case Layered::Layer::Ghost: os << x.value << "v"; break;
    }
  }
  void operator()(const Pair& x) const { os << "(" << x.parts[0] << "," << x.parts[1] << ")"; }
  void operator()(const PointSet& x) const { os << "bits:" << x.bits; }
  void operator()(const TropicalSet& x) const {
    switch (x.kind) {
      case TropicalSet::Kind::Zero: os << "-inf"; break;
      case TropicalSet::Kind::Point: os << x.value; break;
      case TropicalSet::Kind::Ray: os << "[-inf," << x.value << "]"; break;
    }
  }
  void operator()(const PhaseSet& x) const { os << x.str(); }
  void operator()(const Classical& x) const { os << x.value; }
};

}  // namespace

std::ostream& operator<<(std::ostream& os, const Element& e) {
  std::visit(Dump{os}, e.payload());
  return os;
}

}  // namespace systema
