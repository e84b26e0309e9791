#include "succession/linalg.hpp"

#include <utility>

namespace succession {

void require_shape(const RationalMatrix& a, std::size_t rows, std::size_t cols, const char* what) {
  bool ok = a.size() == rows;
  for (const auto& row : a) ok = ok && row.size() == cols;
  if (!ok) {
    throw std::invalid_argument(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  require_shape(a, a.size(), inner, "left factor");
  RationalMatrix out(a.size(), RationalVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  require_shape(a, a.size(), x.size(), "matrix");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RationalMatrix out(cols, RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product of vectors with different lengths");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

namespace {

// Reduces [a | rhs] to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational pivot = a[row][col];
    for (auto& v : a[row]) v /= pivot;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  require_shape(a, n, n, "matrix");
  RationalMatrix work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i] = a[i];
    work[i].resize(2 * n);
    work[i][n + i] = 1;
  }
  if (row_reduce(work, n).size() != n) throw SingularMatrixError("matrix is singular");
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(work[i].begin() + static_cast<std::ptrdiff_t>(n), work[i].end());
  return out;
}

RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.size();
  require_shape(a, n, n, "matrix");
  if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  RationalMatrix work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i] = a[i];
    work[i].push_back(b[i]);
  }
  if (row_reduce(work, n).size() != n) throw SingularMatrixError("system matrix is singular");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = work[i][n];
  return x;
}

std::size_t rank(RationalMatrix a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  return row_reduce(a, cols).size();
}

}  // namespace succession
