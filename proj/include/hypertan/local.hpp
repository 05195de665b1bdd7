#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypertan/projective.hpp"

namespace hypertan {

/// Affine chart around a point: the variable set to 1 and the two free
/// variables, with the point moved to the origin.
struct Chart {
  int dehom = 2;
  std::array<int, 2> free{0, 1};
  ProjectivePoint point;

  /// Projective point with affine offset (a, b) from `point`.
  ProjectivePoint at(const FieldElement& a, const FieldElement& b) const;
};

Chart chart_for(const ProjectivePoint& p);

/// A curve germ at the origin of a 2-variable chart (u, v).
struct LocalGerm {
  Poly f{2};
  FieldPtr field;
  /// Variable whose zero set is the last exceptional divisor, or -1.
  int exceptional_var = -1;
};

/// Germ of the form at p in the chart chosen by chart_for(p).
LocalGerm germ_at(const Poly& form, const ProjectivePoint& p);
LocalGerm make_germ(const Poly& f);

/// A Galois orbit of tangent directions (a : b) of a germ, with its
/// multiplicity as a factor of the tangent cone.
struct Direction {
  bool vertical = false;  ///< direction (0 : 1), the line u = 0
  FieldElement slope;     ///< direction (1 : slope) when not vertical
  FieldPtr field;
  int orbit = 1;
  int multiplicity = 1;
};

/// Lowest-degree homogeneous part of the germ.
Poly tangent_cone(const LocalGerm& g);
std::vector<Direction> tangent_directions(const LocalGerm& g, const Budget& budget = {});
/// Strict transform at the infinitely near point in direction `d`.
LocalGerm blowup_strict_transform(const LocalGerm& g, const Direction& d);

struct PointType {
  static constexpr int kInfinite = -1;
  int m = 1;
  int n = kInfinite;
  bool infinite() const { return n == kInfinite; }
  friend bool operator==(const PointType& a, const PointType& b) { return a.m == b.m && a.n == b.n; }
  std::string to_string() const;
};

enum class BlowupCase { A, B, C };

/// Predicted type of the strict transform after one blow-up of an (m,n)-point.
struct BlowupPrediction {
  BlowupCase kase = BlowupCase::A;
  int child_m = 1;
  /// Contact order of the child with its tangent, or 0 when not determined (case C).
  int child_n = 0;
  bool tangent_to_exceptional = false;
  bool tangent_to_strict_line = false;
};

BlowupPrediction classify_blowup(const PointType& t);
std::string to_string(BlowupCase c);

int germ_multiplicity(const LocalGerm& g);
int germ_branch_count(const LocalGerm& g, const Budget& budget = {});
/// Point type of a unibranched germ; PreconditionError otherwise.
PointType germ_point_type(const LocalGerm& g, const Budget& budget = {});
/// Direction (a : b) of the unique tangent of a unibranched germ.
std::array<FieldElement, 2> germ_tangent(const LocalGerm& g, const Budget& budget = {});
int germ_delta(const LocalGerm& g, const Budget& budget = {});
/// Intersection multiplicity at the origin by the Noether recursion.
int germ_intersection(const LocalGerm& f, const LocalGerm& g, const Budget& budget = {});

int multiplicity_at(const PlaneCurve& c, const ProjectivePoint& p);
int branch_count(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget = {});
bool is_unibranched(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget = {});
PointType point_type(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget = {});
int local_intersection_multiplicity(const PlaneCurve& c, const PlaneCurve& b, const ProjectivePoint& p,
                                    const Budget& budget = {});

struct TreeNode {
  int multiplicity = 1;
  int orbit = 1;   ///< conjugate copies relative to the parent
  int weight = 1;  ///< conjugate copies over the algebraic closure
  int field_degree = 1;
  std::vector<TreeNode> children;
};

struct InfinitelyNearTree {
  ProjectivePoint point;
  TreeNode root;
  int delta() const;
  int branches() const;
  int size() const;
};

InfinitelyNearTree infinitely_near_tree(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget = {});
int delta_invariant(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget = {});

/// A Galois orbit of intersection points: `point` is one representative over
/// its field of definition and `orbit` counts the conjugates.
struct IntersectionPoint {
  ProjectivePoint point;
  int orbit = 1;
  int multiplicity = 0;
};

/// All intersection points over the algebraic closure; the multiplicities
/// (counted with orbits) always sum to deg C * deg B.
std::vector<IntersectionPoint> intersection_points(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget = {});

struct SingularPoint {
  ProjectivePoint point;
  int orbit = 1;
  int multiplicity = 2;
  int delta = 1;
  int branches = 1;
};

std::vector<SingularPoint> singular_points(const PlaneCurve& c, const Budget& budget = {});
int geometric_genus(const PlaneCurve& c, const Budget& budget = {});

/// Univariate restriction F(x0, y, z0) as a polynomial in y.
KPoly restrict_to_y(const Poly& form, const FieldElement& x0, const FieldElement& z0);

}  // namespace hypertan
