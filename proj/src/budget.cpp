#include "systema/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace systema {
namespace {

std::uint64_t toNumber(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw std::invalid_argument("bad budget value '" + std::string(s) + "'");
  return v;
}

}  // namespace

Budget Budget::parse(std::string_view spec, Budget base) {
  if (spec.empty()) return base;
  if (spec.find('=') == std::string_view::npos) {
    base.searchLimit = toNumber(spec);
    return base;
  }
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("bad budget entry '" + std::string(item) + "'");
    std::string_view key = item.substr(0, eq);
    std::uint64_t value = toNumber(item.substr(eq + 1));
    if (key == "search")
      base.searchLimit = value;
    else if (key == "det")
      base.detSizeBound = value;
    else if (key == "height")
      base.heightBound = value;
    else if (key == "characteristic")
      base.characteristicBound = value;
    else
      throw std::invalid_argument("unknown budget key '" + std::string(key) + "'");
  }
  return base;
}

Budget Budget::parse(std::string_view spec) { return parse(spec, Budget{}); }

Budget Budget::fromEnvironment() {
  const char* env = std::getenv("SYSTEMA_BUDGET");
  return env ? parse(env) : Budget{};
}

const Budget& defaultBudget() {
  static const Budget budget = Budget::fromEnvironment();
  return budget;
}

}  // namespace systema
