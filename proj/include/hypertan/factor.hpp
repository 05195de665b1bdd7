#pragma once

#include <vector>

#include "hypertan/dense_poly.hpp"

namespace hypertan {

struct QFactor {
  QPoly poly;  ///< monic, irreducible over Q
  int exponent = 1;
};

/// f = unit * prod poly^exponent, factors sorted by (degree, coefficients).
struct QFactorization {
  Rational unit;
  std::vector<QFactor> factors;
};

/// Complete factorization over Q (squarefree decomposition, then Zassenhaus:
/// modular factorization, Hensel lifting and exhaustive recombination).
///
/// Throws BudgetExceeded when a squarefree part has degree above
/// `max_degree` or recombination would exceed its subset cap; never returns a
/// partial answer.
QFactorization factor_rational(const QPoly& f, int max_degree = Budget{}.factor_degree);

bool is_irreducible_rational(const QPoly& f, int max_degree = Budget{}.factor_degree);

/// Orders polynomials by degree, then lexicographically from the top coefficient.
bool poly_less(const QPoly& a, const QPoly& b);

}  // namespace hypertan
