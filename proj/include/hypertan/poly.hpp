#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypertan/number_field.hpp"

namespace hypertan {

using Exponent = std::array<int, 3>;

/// Sparse polynomial in 1, 2 or 3 variables (x, y, z) over a number field.
///
/// Terms are keyed by exponent triples in lexicographic order with x
/// dominant; unused variables keep exponent 0. Zero coefficients are never
/// stored.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(int nvars);

  static Poly constant(const FieldElement& c, int nvars);
  static Poly variable(int var, int nvars);
  static Poly monomial(const FieldElement& c, const Exponent& e, int nvars);
  static Poly from_kpoly(const KPoly& p, int var, int nvars);

  int nvars() const { return nvars_; }
  const std::map<Exponent, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t size() const { return terms_.size(); }

  /// Total degree, kZeroDegree for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  int min_degree_in(int var) const;
  /// Lowest total degree of a term (the order at the origin).
  int order() const;
  bool is_homogeneous() const;
  bool involves(int var) const { return degree_in(var) > 0; }

  FieldElement coeff(const Exponent& e) const;
  /// Coefficient of the lexicographically largest monomial.
  const FieldElement& leading_coeff() const;
  const Exponent& leading_exponent() const;

  /// Smallest field containing every coefficient.
  FieldPtr field() const;
  Poly in(const FieldPtr& k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElement& c, const Poly& a);
  friend Poly operator*(const Poly& a, const FieldElement& c) { return a.scaled(c); }
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b) { return *this += -b; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly pow(int e) const;

  FieldElement eval(const std::vector<FieldElement>& point) const;
  /// Replaces variable `var` with `value` (same variable count).
  Poly substitute(int var, const Poly& value) const;
  /// Replaces every variable i with images[i]; all images share one variable count.
  Poly compose(const std::vector<Poly>& images) const;
  Poly derivative(int var) const;

  /// Homogenizes a 2-variable polynomial with z as the new variable.
  Poly homogenize(int degree) const;
  /// Sets `var` to 1 in a 3-variable form, returning a 2-variable polynomial in
  /// the remaining variables (in their original order).
  Poly dehomogenize(int var) const;

  /// Coefficients of var^k, k = 0..deg, as polynomials not involving var.
  std::vector<Poly> coefficients_in(int var) const;
  Poly homogeneous_part(int deg) const;
  /// Univariate view; the polynomial must involve only `var`.
  KPoly to_kpoly(int var) const;
  Poly with_nvars(int nvars) const;

  /// Divides by the leading coefficient so that it becomes 1.
  Poly normalized() const;
  Poly scaled(const FieldElement& c) const;

  /// Exact division; nullopt when `d` does not divide this polynomial.
  std::optional<Poly> try_divide(const Poly& d) const;
  /// Exact division; throws InternalError when not exact.
  Poly exact_divide(const Poly& d) const;

  std::string to_string() const;

  /// Lexicographic comparison of term lists, for canonical ordering.
  friend int compare(const Poly& a, const Poly& b);

 private:
  int nvars_ = 3;
  std::map<Exponent, FieldElement> terms_;
};

/// Sylvester resultant with respect to `var`, by fraction-free elimination.
Poly resultant(const Poly& f, const Poly& g, int var);

/// Discriminant-free valuation helpers.
int valuation_at_zero(const KPoly& p);

}  // namespace hypertan
