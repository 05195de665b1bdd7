#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypertan/dense_poly.hpp"
#include "hypertan/errors.hpp"
#include "hypertan/rational.hpp"

namespace hypertan {

class NumberField;
/// A null pointer stands for Q.
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q or of a simple extension Q(a), stored as a polynomial in the
/// generator of degree below the field degree.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int v) : rep_(QPoly::constant(Rational(v))) {}
  FieldElement(long v) : rep_(QPoly::constant(Rational(v))) {}
  FieldElement(const Rational& q) : rep_(QPoly::constant(q)) {}
  FieldElement(const Integer& q) : rep_(QPoly::constant(Rational(q))) {}
  /// Reduces `rep` modulo the minimal polynomial of `field`.
  FieldElement(FieldPtr field, QPoly rep);

  static FieldElement generator(const FieldPtr& field);
  static FieldElement from_coordinates(const FieldPtr& field, const std::vector<Rational>& coords);

  const FieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  /// Coordinates in the power basis, padded to the field degree.
  std::vector<Rational> coordinates() const;

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  /// Throws InputError when the element is not rational.
  Rational rational() const;

  /// Image in `target`, which must contain the field of this element.
  FieldElement in(const FieldPtr& target) const;

  FieldElement inverse() const;
  FieldElement pow(int e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order on coordinates, used for canonical sorting only.
  friend int compare(const FieldElement& a, const FieldElement& b);

  /// "3/2*a^2 - a + 1" style rendering in the generator name.
  std::string to_string() const;

 private:
  FieldPtr field_;
  QPoly rep_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }

using KPoly = DensePoly<FieldElement>;

class NumberField {
 public:
  struct Subfield {
    FieldPtr field;
    QPoly image;  ///< image of the subfield generator, as a polynomial in ours
  };

  NumberField(std::string name, QPoly minpoly, std::vector<Subfield> subfields = {});

  const std::string& name() const { return name_; }
  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const std::vector<Subfield>& subfields() const { return subfields_; }

  /// True when elements of `k` embed into this field (k null means Q).
  bool contains(const FieldPtr& k) const;
  const QPoly* image_of(const NumberField* k) const;

 private:
  std::string name_;
  QPoly minpoly_;
  std::vector<Subfield> subfields_;
};

/// Absolute degree; 1 for Q.
inline int absolute_degree(const FieldPtr& k) { return k ? k->degree() : 1; }

/// The larger of the two fields when one contains the other; FieldMismatch otherwise.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
bool field_contains(const FieldPtr& big, const FieldPtr& small);

/// Validates `minpoly` (monic, irreducible over Q, within budget) and builds Q(a).
/// Degree one yields Q itself (null).
FieldPtr make_number_field(const std::string& name, const QPoly& minpoly, const Budget& budget = {});

/// Embedding of a field into an extension, given by the image of its generator.
struct Embedding {
  FieldPtr from;
  FieldPtr to;
  FieldElement image;  ///< image of the generator of `from` (unused when from is Q)
  FieldElement operator()(const FieldElement& a) const;
};

/// Result of adjoining a root of an irreducible polynomial to a field.
struct Extension {
  FieldPtr field;
  FieldElement root;
  int relative_degree = 1;
};

/// Adjoins a root of `p`, irreducible over `base`. The new field is a simple
/// extension of Q registered as containing `base` and all its subfields.
/// Throws InputError when p is reducible and BudgetExceeded when the absolute
/// degree would exceed the budget.
Extension adjoin_root(const FieldPtr& base, const KPoly& p, const std::string& name = "", const Budget& budget = {});

/// Norm from K[t] down to Q[t].
QPoly norm(const FieldPtr& k, const KPoly& f);

struct KFactor {
  KPoly poly;  ///< monic irreducible over the field
  int exponent = 1;
};

/// Complete factorization over K by the norm method. Factors are monic.
std::vector<KFactor> factor_over(const FieldPtr& k, const KPoly& f, const Budget& budget = {});
bool is_irreducible_over(const FieldPtr& k, const KPoly& f, const Budget& budget = {});

/// All roots over the algebraic closure, grouped into conjugacy classes over K.
struct AlgebraicRoot {
  Extension ext;      ///< ext.root is one root; ext.relative_degree conjugates share it
  int multiplicity = 1;
  KPoly minpoly;      ///< monic irreducible factor over K
};
std::vector<AlgebraicRoot> roots_over(const FieldPtr& k, const KPoly& f, const Budget& budget = {});

/// Converts between Q-coefficient and K-coefficient polynomials.
KPoly to_kpoly(const QPoly& p);
KPoly kpoly_in(const KPoly& p, const FieldPtr& k);
/// Smallest field containing all coefficients.
FieldPtr kpoly_field(const KPoly& p);

Rational resultant(const QPoly& a, const QPoly& b);

}  // namespace hypertan
