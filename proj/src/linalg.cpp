#include "hypertan/linalg.hpp"

namespace hypertan {

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  const size_t rows = m.size();
  if (rows == 0) return pivots;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const FieldElement inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElement f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

LinearSolution solve_linear(const Matrix& a, const Vector& rhs) {
  if (a.size() != rhs.size()) throw InputError("solve_linear: row count mismatch");
  const size_t cols = a.empty() ? 0 : a[0].size();
  Matrix aug;
  aug.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw InputError("solve_linear: ragged matrix");
    Vector row = a[i];
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  LinearSolution sol;
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return sol;  // 0 = 1
  sol.consistent = true;
  sol.rank = static_cast<int>(pivots.size());
  sol.particular.assign(cols, FieldElement(0));
  std::vector<bool> is_pivot(cols, false);
  for (size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = aug[r][cols];
    is_pivot[pivots[r]] = true;
  }
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, FieldElement(0));
    v[free] = FieldElement(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][free];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

FieldElement determinant(Matrix m) {
  const size_t n = m.size();
  FieldElement det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return FieldElement(0);
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det = det * m[c][c];
    const FieldElement inv = m[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const FieldElement f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const size_t n = m.size();
  Matrix aug(n);
  for (size_t i = 0; i < n; ++i) {
    aug[i] = m[i];
    for (size_t j = 0; j < n; ++j) aug[i].push_back(FieldElement(i == j ? 1 : 0));
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) throw InputError("matrix is singular");
  Matrix out(n);
  for (size_t i = 0; i < n; ++i) out[i] = Vector(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix out(n, Vector(m, FieldElement(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Vector apply(const Matrix& a, const Vector& v) {
  Vector out(a.size(), FieldElement(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

}  // namespace hypertan
