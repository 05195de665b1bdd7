#pragma once

#include <vector>

#include "hypertan/number_field.hpp"

namespace hypertan {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;

/// Affine solution space of A x = b: particular + span(kernel).
struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  Vector particular;
  std::vector<Vector> kernel;
};

/// Exact Gauss-Jordan elimination. An inconsistent system is reported through
/// `consistent == false`, not by throwing.
LinearSolution solve_linear(const Matrix& a, const Vector& rhs);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Matrix& m);

FieldElement determinant(Matrix m);
/// Throws InputError when singular.
Matrix inverse(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& v);

}  // namespace hypertan
