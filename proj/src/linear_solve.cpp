#include "wick/linear_solve.hpp"

#include "wick/error.hpp"

namespace wick {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const T inv = T(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const T f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c)
        if (!a[row][c].is_zero()) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_linear(Matrix<Scalar> a, std::vector<Scalar> b) {
  if (a.size() != b.size()) throw InternalError("solve_linear: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = row_reduce(a, cols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (!a[r][cols].is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

std::size_t rank(Matrix<Scalar> a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  return row_reduce(a, cols).size();
}

MatrixInverse invert(const Matrix<RationalFunction>& m) {
  const std::size_t n = m.size();
  Matrix<RationalFunction> aug(n);
  for (std::size_t r = 0; r < n; ++r) {
    aug[r] = m[r];
    aug[r].resize(2 * n);
    aug[r][n + r] = RationalFunction(1);
  }
  RationalFunction det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug[p][col].is_zero()) ++p;
    if (p == n) throw MathError("singular matrix");
    if (p != col) {
      std::swap(aug[p], aug[col]);
      det = -det;
    }
    det *= aug[col][col];
    const RationalFunction inv = RationalFunction(1) / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const RationalFunction f = aug[r][col];
      for (std::size_t c = col; c < 2 * n; ++c)
        if (!aug[col][c].is_zero()) aug[r][c] -= f * aug[col][c];
    }
  }
  MatrixInverse out;
  out.determinant = det;
  out.inverse.resize(n);
  for (std::size_t r = 0; r < n; ++r)
    out.inverse[r].assign(aug[r].begin() + static_cast<std::ptrdiff_t>(n), aug[r].end());
  return out;
}

RationalFunction determinant(const Matrix<RationalFunction>& m) {
  try {
    return invert(m).determinant;
  } catch (const MathError&) {
    return RationalFunction();
  }
}

}  // namespace wick
