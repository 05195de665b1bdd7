#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hypertan/bivariate.hpp"
#include "hypertan/linalg.hpp"

namespace hypertan {

/// Point of P^2 over a number field, kept in canonical form (last nonzero
/// coordinate equal to 1).
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  ProjectivePoint(FieldElement x, FieldElement y, FieldElement z);
  explicit ProjectivePoint(const std::array<FieldElement, 3>& c) : ProjectivePoint(c[0], c[1], c[2]) {}

  /// "x:y:z" with exact rational entries.
  static ProjectivePoint parse(const std::string& text);

  const FieldElement& operator[](int i) const { return c_[i]; }
  const std::array<FieldElement, 3>& coords() const { return c_; }
  Vector vec() const { return {c_[0], c_[1], c_[2]}; }
  FieldPtr field() const;
  bool is_rational() const;
  ProjectivePoint in(const FieldPtr& k) const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
  friend int compare(const ProjectivePoint& a, const ProjectivePoint& b);
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> c_{FieldElement(0), FieldElement(0), FieldElement(1)};
};

/// Reduced-or-not plane curve given by a nonzero form, normalized so that its
/// lexicographically leading coefficient is 1.
class PlaneCurve {
 public:
  PlaneCurve() = default;
  explicit PlaneCurve(const Poly& form);

  const Poly& form() const { return form_; }
  int degree() const { return form_.degree(); }
  FieldPtr field() const { return form_.field(); }

  /// Irreducible components over the working field (the coefficient field),
  /// computed once and cached.
  const std::vector<PolyFactor>& components(const Budget& budget = {}) const;
  bool is_squarefree(const Budget& budget = {}) const;

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.form_ == b.form_; }
  friend bool operator!=(const PlaneCurve& a, const PlaneCurve& b) { return !(a == b); }
  std::string to_string() const { return form_.to_string(); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<PolyFactor> components;
  };
  Poly form_{3};
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

PlaneCurve curve_product(const std::vector<PlaneCurve>& parts);

bool contains(const PlaneCurve& c, const ProjectivePoint& p);
/// Line through two distinct points; PreconditionError when p == q.
PlaneCurve line_through(const ProjectivePoint& p, const ProjectivePoint& q);
/// Coefficients (a, b, c) of a line a x + b y + c z.
std::array<FieldElement, 3> line_coefficients(const PlaneCurve& line);
PlaneCurve line_from_coefficients(const std::array<FieldElement, 3>& abc);
/// Intersection point of two distinct lines.
ProjectivePoint meet(const PlaneCurve& l1, const PlaneCurve& l2);
/// Irreducible and reduced over the working field (absolute irreducibility is assumed).
bool is_integral(const PlaneCurve& c, const Budget& budget = {});

/// Invertible 3x3 matrix acting on column vectors of coordinates; curves are
/// transported by substituting the inverse.
class Projectivity {
 public:
  Projectivity();
  explicit Projectivity(Matrix m);
  static Projectivity identity() { return Projectivity(); }

  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return inv_; }
  Projectivity inverse() const;
  Projectivity then(const Projectivity& next) const;

  ProjectivePoint apply(const ProjectivePoint& p) const;
  PlaneCurve apply(const PlaneCurve& c) const;
  Poly apply_form(const Poly& form) const;

 private:
  Matrix m_;
  Matrix inv_;
};

/// Tangent line at a unibranched point, from the unique direction of the
/// tangent cone. Throws PreconditionError when p is not on C or not unibranched.
PlaneCurve tangent_line(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget = {});

/// Projectivity T with T(p) = (0:1:0), T(Lp) = {z = 0}, T(q) = (0:0:1) and
/// T(Lq) = {y = 0}. `scales` fixes the two remaining diagonal freedoms (the
/// default sets them to 1). Requires p in Lp, q in Lq, p not in Lq and q not in Lp.
Projectivity frame_normalize(const ProjectivePoint& p, const PlaneCurve& lp, const ProjectivePoint& q,
                             const PlaneCurve& lq, const std::array<Rational, 2>& scales = {Rational(1), Rational(1)});

}  // namespace hypertan
