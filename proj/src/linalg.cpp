#include "systema/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "systema/budget.hpp"
#include "systema/errors.hpp"

namespace systema {

Vector::Vector(System s, std::size_t n) : system_(std::move(s)), entries_(n, system_->zero) {}

Vector::Vector(System s, std::vector<Element> entries) : system_(std::move(s)), entries_(std::move(entries)) {}

bool Vector::isTangible() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Element& e) { return e == system_->zero || system_->isTangible(e); });
}

Matrix::Matrix(System s, std::size_t rows, std::size_t cols)
    : system_(std::move(s)), rows_(rows), cols_(cols), entries_(rows * cols, system_->zero) {}

Matrix::Matrix(System s, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : system_(std::move(s)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw PreconditionError("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                            std::to_string(entries_.size()));
}

Matrix Matrix::identity(System s, std::size_t n) {
  Matrix m(s, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s->unit();
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(system_, std::vector<Element>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return Vector(system_, std::move(out));
}

Matrix Matrix::transpose() const {
  Matrix t(system_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rowIdx, const std::vector<std::size_t>& colIdx) const {
  Matrix m(system_, rowIdx.size(), colIdx.size());
  for (std::size_t i = 0; i < rowIdx.size(); ++i)
    for (std::size_t j = 0; j < colIdx.size(); ++j) m(i, j) = (*this)(rowIdx[i], colIdx[j]);
  return m;
}

Matrix Matrix::swapRows(std::size_t i, std::size_t j) const {
  Matrix m = *this;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(m(i, c), m(j, c));
  return m;
}

bool Matrix::isTangible() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Element& e) { return e == system_->zero || system_->isTangible(e); });
}

namespace {

void requireConforming(const Matrix& a, const Matrix& b, bool sameShape) {
  requireSameSystem(a.system(), b.system());
  if (sameShape ? (a.rows() != b.rows() || a.cols() != b.cols()) : a.cols() != b.rows())
    throw PreconditionError("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void requireSquareWithinBound(const Matrix& a) {
  if (!a.square()) throw PreconditionError("matrix is not square");
  if (a.rows() > defaultBudget().detSizeBound)
    throw BudgetExceeded("determinant size " + std::to_string(a.rows()) + " exceeds bound " +
                         std::to_string(defaultBudget().detSizeBound));
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order; stops when fn returns true.
template <class Fn>
bool forEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

std::uint64_t saturatingPow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

void requireWithinBudget(std::uint64_t count, const char* what) {
  if (count > defaultBudget().searchLimit)
    throw BudgetExceeded(std::string(what) + " needs " + std::to_string(count) + " candidates, budget is " +
                         std::to_string(defaultBudget().searchLimit));
}

std::vector<Element> tangiblePool(const SystemDescriptor& S, const std::vector<Element>* candidates,
                                  SearchScope& scope) {
  std::vector<Element> pool;
  if (candidates) {
    for (const auto& c : *candidates)
      if (S.isTangible(c)) pool.push_back(c);
    scope.sampled = !S.finite();
  } else {
    if (!S.finite()) throw PreconditionError("system " + S.name + " has infinitely many tangibles; supply candidates");
    pool = S.tangibles();
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

}  // namespace

Matrix matAdd(const Matrix& a, const Matrix& b) {
  requireConforming(a, b, true);
  Matrix out(a.system(), a.rows(), a.cols());
  const auto& S = *a.system();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = S.add(a(i, j), b(i, j));
  return out;
}

Matrix matMul(const Matrix& a, const Matrix& b) {
  requireConforming(a, b, false);
  Matrix out(a.system(), a.rows(), b.cols());
  const auto& S = *a.system();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = S.zero;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = S.add(acc, S.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

Matrix matNegate(const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.system()->negate(a(i, j));
  return out;
}

Matrix matScale(const Element& s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.system()->mul(s, a(i, j));
  return out;
}

Vector matVec(const Matrix& a, const Vector& v) {
  requireSameSystem(a.system(), v.system());
  if (a.cols() != v.size()) throw PreconditionError("shape mismatch: matrix columns vs vector length");
  const auto& S = *a.system();
  Vector out(a.system(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Element acc = S.zero;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = S.add(acc, S.mul(a(i, k), v[k]));
    out[i] = acc;
  }
  return out;
}

Element detMinus(const Matrix& a) {
  requireSquareWithinBound(a);
  const auto& S = *a.system();
  const std::size_t n = a.rows();
  if (n == 0) return S.unit();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Element sum = S.zero;
  do {
    Element term = a(0, perm[0]);
    for (std::size_t i = 1; i < n && term != S.zero; ++i) term = S.mul(term, a(i, perm[i]));
    if (term == S.zero) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    if (inversions % 2) term = S.negate(term);
    sum = S.add(sum, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool isNonsingular(const Matrix& a) { return a.system()->isTangible(detMinus(a)); }

Matrix adjMinus(const Matrix& a) {
  requireSquareWithinBound(a);
  const std::size_t n = a.rows();
  if (n == 0) throw PreconditionError("adjoint needs n >= 1");
  const auto& S = *a.system();
  Matrix out(a.system(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element d = detMinus(a.submatrix(complement(n, {j}), complement(n, {i})));
      out(i, j) = (i + j) % 2 ? S.negate(d) : d;
    }
  return out;
}

Element laplaceDet(const Matrix& a, const std::vector<std::size_t>& rowSet) {
  requireSquareWithinBound(a);
  const std::size_t n = a.rows();
  if (rowSet.empty()) throw PreconditionError("Laplace row set must be nonempty");
  for (std::size_t k = 0; k < rowSet.size(); ++k) {
    if (rowSet[k] >= n) throw PreconditionError("Laplace row index out of range");
    if (k > 0 && rowSet[k] <= rowSet[k - 1]) throw PreconditionError("Laplace row set must be sorted and distinct");
  }
  const auto& S = *a.system();
  const auto rowRest = complement(n, rowSet);
  const std::size_t rowParity = std::accumulate(rowSet.begin(), rowSet.end(), std::size_t{0});
  Element sum = S.zero;
  forEachSubset(n, rowSet.size(), [&](const std::vector<std::size_t>& colSet) {
    Element term = S.mul(detMinus(a.submatrix(rowRest, complement(n, colSet))), detMinus(a.submatrix(rowSet, colSet)));
    std::size_t parity = rowParity + std::accumulate(colSet.begin(), colSet.end(), std::size_t{0});
    if (parity % 2) term = S.negate(term);
    sum = S.add(sum, term);
    return false;
  });
  return sum;
}

CramerResult cramerCertify(const Matrix& a, const Vector& v) {
  requireSameSystem(a.system(), v.system());
  requireSquareWithinBound(a);
  if (v.size() != a.rows()) throw PreconditionError("vector length does not match matrix size");
  const auto& S = *a.system();
  Element det = detMinus(a);
  Vector w = matVec(adjMinus(a), v);
  std::optional<Element> inv;
  if (S.isTangible(det)) inv = S.inverse(det);
  CramerResult out{w, det, inv.has_value(), true};
  if (inv)
    for (std::size_t i = 0; i < w.size(); ++i) out.y[i] = S.mul(*inv, w[i]);
  Vector ay = matVec(a, out.y);
  for (std::size_t i = 0; i < v.size() && out.holds; ++i) {
    Element lhs = out.scaled ? v[i] : S.mul(det, v[i]);
    out.holds = S.preceqCirc(lhs, ay[i]);
  }
  return out;
}

SolveResult tangibleSolve(const Matrix& a, const Vector& v, const std::vector<Element>* candidates) {
  requireSameSystem(a.system(), v.system());
  if (v.size() != a.rows()) throw PreconditionError("vector length does not match matrix rows");
  const auto& S = *a.system();
  SolveResult out;
  std::vector<Element> pool = tangiblePool(S, candidates, out.scope);
  pool.push_back(S.zero);
  std::sort(pool.begin(), pool.end());
  const std::size_t n = a.cols();
  requireWithinBudget(saturatingPow(pool.size(), n), "tangibleSolve");
  std::vector<std::size_t> idx(n, 0);
  Vector x(a.system(), n);
  while (true) {
    bool allZero = true;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = pool[idx[i]];
      allZero &= x[i] == S.zero;
    }
    if (!allZero) {
      ++out.scope.examined;
      Vector r = matVec(a, x);
      bool ok = true;
      for (std::size_t i = 0; i < r.size() && ok; ++i) ok = S.isQuasiZero(S.add(r[i], v[i]));
      if (ok) {
        out.x = x;
        return out;
      }
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

DependenceResult isTDependent(const std::vector<Vector>& vs, const std::vector<Element>* candidates) {
  DependenceResult out;
  if (vs.empty()) return out;
  const System& sys = vs.front().system();
  for (const auto& v : vs) {
    requireSameSystem(sys, v.system());
    if (v.size() != vs.front().size()) throw PreconditionError("vectors differ in length");
  }
  const auto& S = *sys;
  std::vector<Element> pool = tangiblePool(S, candidates, out.scope);
  if (pool.empty()) return out;
  const std::size_t k = vs.size();
  if (k >= 63) throw BudgetExceeded("too many vectors for dependence search");
  requireWithinBudget(saturatingPow(pool.size() + 1, k), "isTDependent");
  const std::size_t len = vs.front().size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) subset.push_back(i);
    std::vector<std::size_t> idx(subset.size(), 0);
    while (true) {
      ++out.scope.examined;
      bool ok = true;
      for (std::size_t e = 0; e < len && ok; ++e) {
        Element acc = S.zero;
        for (std::size_t t = 0; t < subset.size(); ++t) acc = S.add(acc, S.mul(pool[idx[t]], vs[subset[t]][e]));
        ok = S.isQuasiZero(acc);
      }
      if (ok) {
        out.dependent = true;
        out.subset = subset;
        for (auto i : idx) out.coefficients.push_back(pool[i]);
        return out;
      }
      std::size_t pos = idx.size();
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < pool.size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

std::size_t submatrixRank(const Matrix& a, std::vector<std::size_t>* rows, std::vector<std::size_t>* cols) {
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k) {
    bool found = forEachSubset(a.rows(), k, [&](const std::vector<std::size_t>& r) {
      return forEachSubset(a.cols(), k, [&](const std::vector<std::size_t>& c) {
        if (!isNonsingular(a.submatrix(r, c))) return false;
        if (rows) *rows = r;
        if (cols) *cols = c;
        return true;
      });
    });
    if (found) return k;
  }
  return 0;
}

namespace {

std::size_t independenceRank(const std::vector<Vector>& vs, const std::vector<Element>* candidates,
                             std::vector<std::size_t>& witness) {
  for (std::size_t k = vs.size(); k > 0; --k) {
    bool found = forEachSubset(vs.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vector> chosen;
      for (auto i : idx) chosen.push_back(vs[i]);
      if (isTDependent(chosen, candidates).dependent) return false;
      witness = idx;
      return true;
    });
    if (found) return k;
  }
  witness.clear();
  return 0;
}

std::vector<Vector> rowsOf(const Matrix& a) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
  return out;
}

}  // namespace

RankReport rankReport(const Matrix& a, const std::vector<Element>* candidates) {
  RankReport r;
  r.submatrixRank = submatrixRank(a, &r.submatrixRows, &r.submatrixCols);
  if (!a.system()->finite() && !candidates) return r;
  r.sampled = !a.system()->finite();
  r.rowRank = independenceRank(rowsOf(a), candidates, r.independentRows);
  r.columnRank = independenceRank(rowsOf(a.transpose()), candidates, r.independentCols);
  return r;
}

RankGapResult rankGapWitnessSearch(const System& s, std::size_t rows, std::size_t cols) {
  if (!s->finite()) throw PreconditionError("rank-gap search needs a finite system");
  if (rows == 0 || cols == 0) throw PreconditionError("shape must be positive");
  auto pool = s->tangibles();
  const std::size_t cells = rows * cols;
  requireWithinBudget(saturatingPow(pool.size(), cells), "rankGapWitnessSearch");
  RankGapResult out;
  std::vector<std::size_t> idx(cells, 0);
  std::vector<Element> entries(cells);
  while (true) {
    for (std::size_t i = 0; i < cells; ++i) entries[i] = pool[idx[i]];
    Matrix m(s, rows, cols, entries);
    ++out.examined;
    std::size_t sub = submatrixRank(m);
    // Independence is inherited by subsets, so row rank > sub iff some (sub+1) rows are independent.
    bool exceeds = sub < rows && forEachSubset(rows, sub + 1, [&](const std::vector<std::size_t>& idxRows) {
                     std::vector<Vector> chosen;
                     for (auto i : idxRows) chosen.push_back(m.row(i));
                     return !isTDependent(chosen).dependent;
                   });
    if (exceeds) {
      out.witness = m;
      out.ranks = rankReport(m);
      return out;
    }
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

CayleyHamiltonResult cayleyHamiltonCheck(const Matrix& a) {
  const auto& S = *a.system();
  if (S.family != Family::Supertropical) throw PreconditionError("Cayley-Hamilton check needs a supertropical system");
  if (!a.square() || a.rows() == 0 || a.rows() > 4) throw PreconditionError("Cayley-Hamilton check needs 1 <= n <= 4");
  if (!a.isTangible()) throw PreconditionError("Cayley-Hamilton check needs a tangible matrix");
  const std::size_t n = a.rows();
  std::vector<Element> coeff{S.unit()};
  for (std::size_t k = 1; k <= n; ++k) {
    Element c = S.zero;
    forEachSubset(n, k, [&](const std::vector<std::size_t>& idx) {
      c = S.add(c, detMinus(a.submatrix(idx, idx)));
      return false;
    });
    coeff.push_back(c);
  }
  std::vector<Matrix> powers{Matrix::identity(a.system(), n)};
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(matMul(a, powers.back()));
  Matrix f(a.system(), n, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Element c = k % 2 ? S.negate(coeff[k]) : coeff[k];
    f = matAdd(f, matScale(c, powers[n - k]));
  }
  bool ghost = std::all_of(f.entries().begin(), f.entries().end(), [&](const Element& e) { return S.isQuasiZero(e); });
  return {ghost, f, coeff};
}

}  // namespace systema
