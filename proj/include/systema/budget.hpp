#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace systema {

// Limits shared by every bounded search in the library.
//
// The SYSTEMA_BUDGET environment variable overrides the defaults. It is
// either a bare integer (the search limit) or a comma separated list of
// key=value pairs with keys search, det, height, characteristic.
struct Budget {
  std::uint64_t searchLimit = 5'000'000;  // candidate tuples examined per search
  std::size_t detSizeBound = 7;           // largest n for n! determinant expansion
  std::size_t heightBound = 8;
  std::size_t characteristicBound = 64;

  static Budget parse(std::string_view spec, Budget base);
  static Budget parse(std::string_view spec);
  static Budget fromEnvironment();
};

/// Budget::fromEnvironment(), read once.
const Budget& defaultBudget();

}  // namespace systema
