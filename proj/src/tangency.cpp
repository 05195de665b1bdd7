#include "hypertan/tangency.hpp"

#include <algorithm>

#include "hypertan/canonical.hpp"

namespace hypertan {

namespace {

// Point type computed from a single tangent direction, also for
// multi-branch points; nullopt when the tangent cone has several lines.
std::optional<PointType> cone_type(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  LocalGerm g = germ_at(c.form(), p);
  auto dirs = tangent_directions(g, budget);
  if (dirs.size() != 1 || dirs[0].orbit != 1) return std::nullopt;
  const FieldElement a = dirs[0].vertical ? FieldElement(0) : FieldElement(1);
  const FieldElement b = dirs[0].vertical ? FieldElement(1) : dirs[0].slope;
  const Poly t = Poly::variable(0, 1);
  Poly r = g.f.compose({t.scaled(a), t.scaled(b)});
  PointType pt;
  pt.m = g.f.order();
  pt.n = r.is_zero() ? PointType::kInfinite : r.order();
  return pt;
}

}  // namespace

TangencyReport tangency_report(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget) {
  if (!is_integral(c, budget)) throw PreconditionError("subject curve is not integral over its field");
  TangencyReport r;
  r.subject = c;
  r.base = b;
  const bool base_reduced = b.is_squarefree(budget);
  for (const auto& ip : intersection_points(c, b, budget)) {
    ContactPoint cp;
    cp.point = ip.point;
    cp.orbit = ip.orbit;
    cp.multiplicity = ip.multiplicity;
    cp.branches_on_subject = branch_count(c, ip.point, budget);
    if (cp.branches_on_subject == 1) cp.subject_type = point_type(c, ip.point, budget);
    if (base_reduced && branch_count(b, ip.point, budget) == 1) cp.base_type = point_type(b, ip.point, budget);
    r.total_branches += cp.orbit * cp.branches_on_subject;
    r.bezout_total += cp.orbit * cp.multiplicity;
    r.contacts.push_back(std::move(cp));
  }
  if (r.bezout_total != c.degree() * b.degree()) throw InternalError("tangency report: Bezout total mismatch");
  r.hypertangent = r.total_branches == 1;
  r.hyper_bitangent = r.total_branches <= 2;
  return r;
}

TangencyReport is_hypertangent(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget) {
  return tangency_report(c, b, budget);
}

TangencyReport is_hyper_bitangent(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget) {
  return tangency_report(c, b, budget);
}

MirrorReport mirror_check(const PlaneCurve& c, const PlaneCurve& b, const ProjectivePoint& q, const Budget& budget) {
  MirrorReport r;
  auto& v = r.violations;
  if (b.degree() < 2) v.push_back("deg B < 2");
  if (c.degree() < 2) v.push_back("deg C < 2");
  if (!contains(b, q)) v.push_back("q is not on B");
  if (!contains(c, q)) v.push_back("q is not on C");
  if (!v.empty()) return r;
  if (!is_integral(b, budget)) v.push_back("B is not integral");
  if (!is_integral(c, budget)) v.push_back("C is not integral");
  const bool c_reduced = c.is_squarefree(budget);

  auto pts = intersection_points(c, b, budget);
  if (pts.size() != 1 || pts[0].orbit != 1 || !(orbit_key(pts[0].point) == orbit_key(q)))
    v.push_back("B and C meet in " + std::to_string(pts.size()) + " point orbit(s), not only at q");

  if (branch_count(b, q, budget) != 1) {
    v.push_back("q is not unibranched on B");
  } else {
    PointType tb = point_type(b, q, budget);
    if (tb.m != 1) v.push_back("q is singular on B");
    if (tb.infinite()) v.push_back("B contains its tangent line at q");
    else r.l = tb.n;
  }

  r.m = multiplicity_at(c, q);
  r.predicted_type = PointType{r.m, r.l * r.m};
  if (c_reduced) {
    r.branches_on_subject = branch_count(c, q, budget);
    if (r.branches_on_subject != 1)
      v.push_back("q has " + std::to_string(r.branches_on_subject) + " branches on C");
    r.delta_observed = delta_invariant(c, q, budget);
  } else {
    v.push_back("C is not reduced");
  }
  r.observed_type = cone_type(c, q, budget);
  r.delta_bound = Rational((r.m - 1) * (b.degree() * c.degree() - r.m), 2);
  r.delta_bound.canonicalize();

  const bool type_ok = r.observed_type && *r.observed_type == r.predicted_type;
  const bool delta_ok = r.delta_observed && Rational(*r.delta_observed) >= r.delta_bound;
  r.pass = v.empty() && type_ok && delta_ok;
  return r;
}

Poly hessian(const PlaneCurve& c) {
  const Poly& f = c.form();
  Poly h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) h[i][j] = h[j][i] = f.derivative(i).derivative(j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

std::vector<Flex> flexes(const PlaneCurve& c, const Budget& budget) {
  if (!is_integral(c, budget)) throw PreconditionError("flexes: curve is not integral");
  std::vector<Flex> out;
  if (c.degree() <= 2) return out;
  Poly h = hessian(c);
  if (h.is_zero()) throw InternalError("flexes: Hessian vanishes identically on a non-linear integral curve");
  if (h.degree() <= 0) throw InternalError("flexes: constant Hessian for degree >= 3");
  PlaneCurve hc(h);
  int total = 0;
  for (const auto& ip : intersection_points(c, hc, budget)) {
    if (multiplicity_at(c, ip.point) != 1) continue;
    PlaneCurve t = tangent_line(c, ip.point, budget);
    const int l = local_intersection_multiplicity(c, t, ip.point, budget);
    if (l < 3) throw InternalError("flexes: Hessian point with contact order " + std::to_string(l));
    out.push_back({ip.point, ip.orbit, l});
    total += ip.orbit;
  }
  if (total > 3 * c.degree() * (c.degree() - 2)) throw InternalError("flexes: more than 3d(d-2) flexes");
  std::sort(out.begin(), out.end(), [](const Flex& a, const Flex& b) { return orbit_key(a.point) < orbit_key(b.point); });
  return out;
}

}  // namespace hypertan
