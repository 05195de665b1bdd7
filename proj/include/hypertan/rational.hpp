#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypertan {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

/// Parses "n", "-n" or "n/d" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "n" or "n/d" rendering, the inverse of parse_rational.
std::string to_string(const Rational& q);

/// Degree budgets shared by every operation that may need to factor or extend fields.
struct Budget {
  /// Maximal degree of a squarefree univariate polynomial handed to the factorizer.
  int factor_degree = 64;
  /// Maximal absolute degree [K:Q] of any number field the library constructs.
  int field_degree = 8;
};

}  // namespace hypertan
