#pragma once

#include <vector>

#include "hypertan/poly.hpp"

namespace hypertan {

struct PolyFactor {
  Poly poly;  ///< normalized (leading coefficient 1)
  int exponent = 1;
};

/// Squarefree part of a nonzero polynomial in 2 or 3 variables, normalized.
/// Forms stay homogeneous.
Poly squarefree_part(const Poly& f);

/// Greatest common divisor of two nonzero polynomials in 2 or 3 variables
/// (forms in x, y, z or affine polynomials in x, y), normalized.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Factorization over `k` (which must contain the coefficient field) into
/// normalized irreducible factors, sorted canonically. Constant factors are
/// dropped.
std::vector<PolyFactor> factor_poly(const Poly& f, const FieldPtr& k, const Budget& budget = {});
inline std::vector<PolyFactor> factor_poly(const Poly& f, const Budget& budget = {}) {
  return factor_poly(f, f.field(), budget);
}

/// Irreducible over `k` and squarefree.
bool is_irreducible(const Poly& f, const FieldPtr& k, const Budget& budget = {});

}  // namespace hypertan
