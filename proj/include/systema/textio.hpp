#pragma once

// Text formats for matrices, polynomials, points, series, and machine reports.
//
// Matrix file
//   rows cols system-name
//   entry entry ...              row-major, whitespace separated
// '#' starts a comment that runs to the end of the line. Series matrices use
// the system name "puiseux" and series tokens without spaces ("1-t", "t^(1/2)").
//
// Polynomial file
//   system-name; vars=n; term + term + ...
// A term is factors joined by '*': at most one coefficient and any number of
// variables x1 / x_1, each optionally raised to ^e. Coefficients containing
// '+', '-' at the start, '*' or ';' must be bracketed, e.g. [+]*x1^2 + [-].
// An omitted coefficient is the unit. No terms at all is the zero polynomial.
//
// Point: entries separated by ',' outside brackets, e.g. "(1,0),(0,1)".

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "systema/linalg.hpp"
#include "systema/polysys.hpp"
#include "systema/tropicalize.hpp"

namespace systema {

using SeriesMatrix = std::vector<std::vector<PuiseuxSeries>>;

Matrix parseMatrix(std::string_view text);
/// The matrix file envelope; parseMatrix(formatMatrix(a)) == a.
std::string formatMatrix(const Matrix& a);
/// An n × 1 or 1 × n matrix read as a vector.
Vector matrixAsVector(const Matrix& a);

SeriesMatrix parseSeriesMatrix(std::string_view text);
std::string formatSeriesMatrix(const SeriesMatrix& a);

Polynomial parsePolynomial(std::string_view text);
std::string formatPolynomial(const Polynomial& f);
SeriesPolynomial parseSeriesPolynomial(std::string_view text);
std::string formatSeriesPolynomial(const SeriesPolynomial& p);

Point parsePoint(const System& s, std::string_view text, std::size_t vars);
std::string formatPoint(const System& s, const Point& p);

/// Reads a whole file; throws Error when it cannot be opened.
std::string readFile(const std::string& path);

// Machine report:
//   systema-report 1
//   kind <kind>
//   <key> <value>          repeated keys allowed, order preserved
//   end
// Values escape '\\' and newlines as "\\\\" and "\\n".
struct Report {
  static constexpr int kVersion = 1;

  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  Report& add(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  std::vector<std::string> getAll(std::string_view key) const;

  std::string str() const;
  static Report parse(std::string_view text);

  bool operator==(const Report&) const = default;
};

}  // namespace systema
