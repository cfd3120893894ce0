#pragma once

// Dense matrices and vectors over a system, and the (-)-determinant family.
//
// Indices are 0-based in the API. Sign parities that the theory states with
// 1-based indices (cofactors, Laplace) come out the same with 0-based ones
// because every parity involves an even number of offsets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "systema/system.hpp"

namespace systema {

class Vector {
 public:
  Vector(System s, std::size_t n);
  Vector(System s, std::vector<Element> entries);

  std::size_t size() const { return entries_.size(); }
  const System& system() const { return system_; }
  const Element& operator[](std::size_t i) const { return entries_[i]; }
  Element& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Element>& entries() const { return entries_; }
  /// Every entry in 𝒯 ∪ {𝟘}.
  bool isTangible() const;
  bool operator==(const Vector& o) const { return entries_ == o.entries_; }

 private:
  System system_;
  std::vector<Element> entries_;
};

class Matrix {
 public:
  /// rows × cols filled with 𝟘.
  Matrix(System s, std::size_t rows, std::size_t cols);
  Matrix(System s, std::size_t rows, std::size_t cols, std::vector<Element> entries);
  /// 𝟙 on the diagonal, 𝟘 elsewhere.
  static Matrix identity(System s, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const System& system() const { return system_; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Element>& entries() const { return entries_; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  Matrix submatrix(const std::vector<std::size_t>& rowIdx, const std::vector<std::size_t>& colIdx) const;
  Matrix swapRows(std::size_t i, std::size_t j) const;
  /// Every entry in 𝒯 ∪ {𝟘}.
  bool isTangible() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  System system_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

Matrix matAdd(const Matrix& a, const Matrix& b);
Matrix matMul(const Matrix& a, const Matrix& b);
Matrix matNegate(const Matrix& a);
Matrix matScale(const Element& s, const Matrix& a);
Vector matVec(const Matrix& a, const Vector& v);

/// Σ_π (-)^π Π a_{i,π(i)}; the 0 × 0 determinant is 𝟙.
Element detMinus(const Matrix& a);
bool isNonsingular(const Matrix& a);
/// Entry (i, j) is the (-)-determinant of A with row j and column i deleted,
/// negated when i + j is odd.
Matrix adjMinus(const Matrix& a);
/// Right-hand side of the generalized Laplace identity for row set I (sorted, distinct).
Element laplaceDet(const Matrix& a, const std::vector<std::size_t>& rowSet);

struct CramerResult {
  Vector y;
  Element det;
  bool scaled = false;  // y = |A|⁻¹ adj(A) v, certificate v ⪯∘ Ay
  bool holds = false;   // otherwise y = adj(A) v, certificate |A| v ⪯∘ Ay
};
CramerResult cramerCertify(const Matrix& a, const Vector& v);

struct SearchScope {
  bool sampled = false;         // candidates came from a window, not the whole of 𝒯
  std::uint64_t examined = 0;   // candidate tuples inspected
};

struct SolveResult {
  std::optional<Vector> x;
  SearchScope scope;
};
/// First x over (𝒯 ∪ {𝟘})ⁿ, not all 𝟘, with A x + v entrywise quasi-zero.
/// `candidates` replaces 𝒯 (required for infinite systems).
SolveResult tangibleSolve(const Matrix& a, const Vector& v, const std::vector<Element>* candidates = nullptr);

struct DependenceResult {
  bool dependent = false;
  std::vector<std::size_t> subset;
  std::vector<Element> coefficients;
  SearchScope scope;
};
/// Some nonempty subset with tangible coefficients sums into quasi-zeros entrywise.
DependenceResult isTDependent(const std::vector<Vector>& vs, const std::vector<Element>* candidates = nullptr);

struct RankReport {
  std::optional<std::size_t> rowRank;     // nullopt: not computed (infinite 𝒯, no candidates)
  std::optional<std::size_t> columnRank;
  std::size_t submatrixRank = 0;
  std::vector<std::size_t> independentRows;
  std::vector<std::size_t> independentCols;
  std::vector<std::size_t> submatrixRows;
  std::vector<std::size_t> submatrixCols;
  bool sampled = false;
};
std::size_t submatrixRank(const Matrix& a, std::vector<std::size_t>* rows = nullptr,
                          std::vector<std::size_t>* cols = nullptr);
RankReport rankReport(const Matrix& a, const std::vector<Element>* candidates = nullptr);

struct RankGapResult {
  std::optional<Matrix> witness;
  std::optional<RankReport> ranks;
  std::uint64_t examined = 0;
};
/// First matrix with entries in 𝒯 (lexicographic, row-major) whose row rank exceeds its submatrix rank.
RankGapResult rankGapWitnessSearch(const System& s, std::size_t rows, std::size_t cols);

struct CayleyHamiltonResult {
  bool ghost = false;
  Matrix value;                    // f(A)
  std::vector<Element> coefficients;  // c₀ = 𝟙, c₁, ..., cₙ
};
/// f(A) = Σ_k (-)^k c_k A^{n-k}, c_k the sum of k × k principal (-)-minors; supertropical systems only.
CayleyHamiltonResult cayleyHamiltonCheck(const Matrix& a);

}  // namespace systema
