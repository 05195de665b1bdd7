#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypertan/local.hpp"

namespace hypertan {

/// One Galois orbit of points of C ∩ B.
struct ContactPoint {
  ProjectivePoint point;
  int orbit = 1;
  int multiplicity = 0;          ///< (C.B) at the point
  int branches_on_subject = 1;   ///< branch count of C at the point
  std::optional<PointType> subject_type;
  std::optional<PointType> base_type;
};

struct TangencyReport {
  PlaneCurve subject;
  PlaneCurve base;
  std::vector<ContactPoint> contacts;
  /// Points of the normalization of C over C ∩ B, over the algebraic closure.
  int total_branches = 0;
  /// Sum of orbit * multiplicity; equals deg C * deg B.
  int bezout_total = 0;
  bool hypertangent = false;
  bool hyper_bitangent = false;
};

/// Contact analysis of C against B. C must be integral over its field and
/// share no component with B.
TangencyReport tangency_report(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget = {});
TangencyReport is_hypertangent(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget = {});
TangencyReport is_hyper_bitangent(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget = {});

struct MirrorReport {
  int l = 0;  ///< contact order of B with its tangent at q
  int m = 0;  ///< multiplicity of C at q
  PointType predicted_type;
  std::optional<PointType> observed_type;
  int branches_on_subject = 0;
  /// The lower bound (m-1)(deg B deg C - m)/2, possibly a half-integer.
  Rational delta_bound;
  std::optional<int> delta_observed;
  std::vector<std::string> violations;  ///< failed preconditions, one message each
  bool pass = false;
};

/// Checks the (m, lm) and delta conclusions at a single contact point q.
MirrorReport mirror_check(const PlaneCurve& c, const PlaneCurve& b, const ProjectivePoint& q, const Budget& budget = {});

/// Determinant of the matrix of second partial derivatives (may be constant or zero).
Poly hessian(const PlaneCurve& c);

struct Flex {
  ProjectivePoint point;
  int orbit = 1;
  int contact = 3;  ///< intersection multiplicity with the tangent line
};

/// Smooth points of C on its Hessian with their tangent contact order.
/// Empty for conics.
std::vector<Flex> flexes(const PlaneCurve& c, const Budget& budget = {});

}  // namespace hypertan
