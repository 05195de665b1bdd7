#include "hypertan/local.hpp"

#include <algorithm>
#include <functional>

namespace hypertan {

namespace {

FieldElement constant_term(const Poly& f) { return f.coeff({0, 0, 0}); }

// Root of a binary form in (x, z): the point (x0 : z0) with its field.
struct BinaryRoot {
  FieldElement x0, z0;
  FieldPtr field;
  int orbit = 1;
  int multiplicity = 1;
};

std::vector<BinaryRoot> binary_form_roots(const Poly& r, const FieldPtr& k, const Budget& budget) {
  std::vector<BinaryRoot> out;
  const int d = r.degree();
  std::vector<FieldElement> c(static_cast<size_t>(d) + 1);
  for (const auto& [e, x] : r.terms()) c[e[0]] = c[e[0]] + x;
  KPoly u(std::move(c));
  const int at_infinity = d - u.degree();
  if (at_infinity > 0) out.push_back({FieldElement(1), FieldElement(0), k, 1, at_infinity});
  if (u.degree() >= 1)
    for (auto& root : roots_over(k, u, budget))
      out.push_back({root.ext.root, FieldElement(1), root.ext.field, root.ext.relative_degree, root.multiplicity});
  return out;
}

// F(x + a y, y, z + b y)
Poly shear_form(const Poly& f, int a, int b) {
  Poly x = Poly::variable(0, 3), y = Poly::variable(1, 3), z = Poly::variable(2, 3);
  return f.compose({x + y.scaled(FieldElement(a)), y, z + y.scaled(FieldElement(b))});
}

ProjectivePoint unshear_point(const FieldElement& x, const FieldElement& y, const FieldElement& z, int a, int b) {
  return ProjectivePoint(x + FieldElement(a) * y, y, z + FieldElement(b) * y);
}

std::vector<std::pair<int, int>> shear_candidates() {
  std::vector<std::pair<int, int>> out{{0, 0}};
  for (int r = 1; r <= 6; ++r)
    for (int a = -r; a <= r; ++a)
      for (int b = -r; b <= r; ++b)
        if (std::max(std::abs(a), std::abs(b)) == r) out.emplace_back(a, b);
  return out;
}

// Cone t(s) = T(1, s) and the multiplicity of the vertical direction.
std::pair<KPoly, int> cone_poly(const LocalGerm& g) {
  const int m = g.f.order();
  std::vector<FieldElement> c(static_cast<size_t>(m) + 1);
  for (const auto& [e, x] : g.f.terms())
    if (e[0] + e[1] == m) c[e[1]] = x;
  KPoly t(std::move(c));
  return {t, m - t.degree()};
}

FieldPtr germ_field(const LocalGerm& g) { return common_field(g.field, g.f.field()); }

int tree_guard(const LocalGerm& g) {
  const int d = std::max(1, g.f.degree());
  return d * (d - 1) / 2 + 2;
}

TreeNode build_tree(const LocalGerm& g, int depth, int guard, int weight, const Budget& budget) {
  TreeNode node;
  node.multiplicity = g.f.order();
  node.weight = weight;
  node.field_degree = absolute_degree(germ_field(g));
  if (node.multiplicity <= 1) return node;
  if (depth > guard) throw InternalError("blow-up recursion exceeded its depth bound (non-reduced germ?)");
  for (const auto& d : tangent_directions(g, budget)) {
    TreeNode child = build_tree(blowup_strict_transform(g, d), depth + 1, guard, weight * d.orbit, budget);
    child.orbit = d.orbit;
    node.children.push_back(std::move(child));
  }
  return node;
}

int tree_delta(const TreeNode& n) {
  int s = n.weight * n.multiplicity * (n.multiplicity - 1) / 2;
  for (const auto& c : n.children) s += tree_delta(c);
  return s;
}

int tree_branches(const TreeNode& n) {
  if (n.children.empty()) return n.weight;
  int s = 0;
  for (const auto& c : n.children) s += tree_branches(c);
  return s;
}

int tree_size(const TreeNode& n) {
  int s = 1;
  for (const auto& c : n.children) s += tree_size(c);
  return s;
}

int intersection_rec(const LocalGerm& f, const LocalGerm& g, int depth, int guard, const Budget& budget) {
  if (!constant_term(f.f).is_zero() || !constant_term(g.f).is_zero()) return 0;
  if (depth > guard) throw CommonComponentError("curves share a component through the point");
  const int mf = f.f.order(), mg = g.f.order();
  int total = mf * mg;
  const FieldPtr k = common_field(germ_field(f), germ_field(g));
  auto [tf, vf] = cone_poly(f);
  auto [tg, vg] = cone_poly(g);
  KPoly common = gcd(kpoly_in(tf, k), kpoly_in(tg, k));
  if (common.degree() >= 1) {
    for (const auto& root : roots_over(k, common, budget)) {
      Direction d{false, root.ext.root, root.ext.field, root.ext.relative_degree, 1};
      total += d.orbit * intersection_rec(blowup_strict_transform(f, d), blowup_strict_transform(g, d), depth + 1,
                                          guard, budget);
    }
  }
  if (vf > 0 && vg > 0) {
    Direction d{true, FieldElement(0), k, 1, 1};
    total += intersection_rec(blowup_strict_transform(f, d), blowup_strict_transform(g, d), depth + 1, guard, budget);
  }
  return total;
}

void require_on_curve(const PlaneCurve& c, const ProjectivePoint& p) {
  if (!contains(c, p)) throw PreconditionError("point " + p.to_string() + " is not on the curve");
}

std::string point_key(const ProjectivePoint& p) {
  std::string s = p.to_string();
  if (FieldPtr k = p.field()) {
    s += " in Q[" + k->name() + "]/(";
    for (int i = k->degree(); i >= 0; --i) s += to_string(k->minpoly().coeff(i)) + ",";
    s += ")";
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

ProjectivePoint Chart::at(const FieldElement& a, const FieldElement& b) const {
  std::array<FieldElement, 3> c;
  c[dehom] = FieldElement(1);
  c[free[0]] = point[free[0]] + a;
  c[free[1]] = point[free[1]] + b;
  return ProjectivePoint(c);
}

Chart chart_for(const ProjectivePoint& p) {
  Chart ch;
  ch.point = p;
  if (!p[2].is_zero()) {
    ch.dehom = 2;
    ch.free = {0, 1};
  } else if (!p[1].is_zero()) {
    ch.dehom = 1;
    ch.free = {0, 2};
  } else {
    ch.dehom = 0;
    ch.free = {1, 2};
  }
  return ch;
}

LocalGerm germ_at(const Poly& form, const ProjectivePoint& p) {
  const Chart ch = chart_for(p);
  const FieldPtr k = common_field(form.field(), p.field());
  std::vector<Poly> images(3, Poly(2));
  images[ch.dehom] = Poly::constant(FieldElement(1), 2);
  images[ch.free[0]] = Poly::variable(0, 2) + Poly::constant(p[ch.free[0]], 2);
  images[ch.free[1]] = Poly::variable(1, 2) + Poly::constant(p[ch.free[1]], 2);
  LocalGerm g;
  g.f = form.in(k).compose(images);
  g.field = k;
  return g;
}

LocalGerm make_germ(const Poly& f) {
  if (f.nvars() != 2) throw InputError("germ polynomial must have 2 variables");
  if (f.is_zero()) throw InputError("germ polynomial is zero");
  LocalGerm g;
  g.f = f;
  g.field = f.field();
  return g;
}

Poly tangent_cone(const LocalGerm& g) { return g.f.homogeneous_part(g.f.order()); }

std::vector<Direction> tangent_directions(const LocalGerm& g, const Budget& budget) {
  if (!constant_term(g.f).is_zero()) throw PreconditionError("germ does not pass through the origin");
  auto [t, vertical] = cone_poly(g);
  const FieldPtr k = germ_field(g);
  std::vector<Direction> out;
  if (t.degree() >= 1)
    for (const auto& root : roots_over(k, t, budget))
      out.push_back({false, root.ext.root, root.ext.field, root.ext.relative_degree, root.multiplicity});
  if (vertical > 0) out.push_back({true, FieldElement(0), k, 1, vertical});
  return out;
}

LocalGerm blowup_strict_transform(const LocalGerm& g, const Direction& d) {
  const int m = g.f.order();
  const FieldPtr k = common_field(germ_field(g), d.field);
  const Poly u = Poly::variable(0, 2), w = Poly::variable(1, 2);
  Poly total;
  int divide_var;
  if (!d.vertical) {
    // v = u (slope + w)
    total = g.f.in(k).compose({u, u * w + u.scaled(d.slope)});
    divide_var = 0;
  } else {
    // u = w v, in coordinates (w, v)
    total = g.f.in(k).compose({u * w, w});
    divide_var = 1;
  }
  LocalGerm out;
  out.field = k;
  out.exceptional_var = divide_var;
  out.f = Poly(2);
  for (const auto& [e, c] : total.terms()) {
    Exponent f = e;
    f[divide_var] -= m;
    if (f[divide_var] < 0) throw InternalError("blow-up: total transform not divisible by the exceptional divisor");
    out.f += Poly::monomial(c, f, 2);
  }
  if (!constant_term(out.f).is_zero()) throw PreconditionError("blow-up direction is not a tangent direction");
  return out;
}

std::string PointType::to_string() const {
  return "(" + std::to_string(m) + "," + (infinite() ? std::string("inf") : std::to_string(n)) + ")";
}

std::string to_string(BlowupCase c) {
  switch (c) {
    case BlowupCase::A:
      return "CASE_A";
    case BlowupCase::B:
      return "CASE_B";
    case BlowupCase::C:
      return "CASE_C";
  }
  return "?";
}

BlowupPrediction classify_blowup(const PointType& t) {
  if (t.infinite()) throw InputError("classify_blowup: infinite contact order");
  if (t.m < 1 || t.n <= t.m) throw InputError("classify_blowup: invalid point type " + t.to_string());
  BlowupPrediction p;
  if (t.n < 2 * t.m) {
    p.kase = BlowupCase::A;
    p.child_m = t.n - t.m;
    p.child_n = t.m;
    p.tangent_to_exceptional = true;
  } else if (t.n > 2 * t.m) {
    p.kase = BlowupCase::B;
    p.child_m = t.m;
    p.child_n = t.n - t.m;
    p.tangent_to_strict_line = true;
  } else {
    p.kase = BlowupCase::C;
    p.child_m = t.m;
    p.child_n = 0;
  }
  return p;
}

int germ_multiplicity(const LocalGerm& g) {
  const int m = g.f.order();
  return m < 0 ? 0 : m;
}

int germ_branch_count(const LocalGerm& g, const Budget& budget) {
  if (!constant_term(g.f).is_zero()) throw PreconditionError("germ does not pass through the origin");
  return tree_branches(build_tree(g, 0, tree_guard(g), 1, budget));
}

int germ_delta(const LocalGerm& g, const Budget& budget) {
  if (!constant_term(g.f).is_zero()) throw PreconditionError("germ does not pass through the origin");
  return tree_delta(build_tree(g, 0, tree_guard(g), 1, budget));
}

std::array<FieldElement, 2> germ_tangent(const LocalGerm& g, const Budget& budget) {
  auto dirs = tangent_directions(g, budget);
  if (dirs.size() != 1 || dirs[0].orbit != 1) throw PreconditionError("point is not unibranched");
  if (dirs[0].vertical) return {FieldElement(0), FieldElement(1)};
  return {FieldElement(1), dirs[0].slope};
}

PointType germ_point_type(const LocalGerm& g, const Budget& budget) {
  if (germ_branch_count(g, budget) != 1) throw PreconditionError("point is not unibranched");
  auto [a, b] = germ_tangent(g, budget);
  const Poly t = Poly::variable(0, 1);
  Poly r = g.f.compose({t.scaled(a), t.scaled(b)});
  PointType pt;
  pt.m = g.f.order();
  pt.n = r.is_zero() ? PointType::kInfinite : r.order();
  return pt;
}

int germ_intersection(const LocalGerm& f, const LocalGerm& g, const Budget& budget) {
  const int guard = std::max(1, f.f.degree()) * std::max(1, g.f.degree()) + 2;
  return intersection_rec(f, g, 0, guard, budget);
}

// ---------------------------------------------------------------------------

int multiplicity_at(const PlaneCurve& c, const ProjectivePoint& p) {
  require_on_curve(c, p);
  return germ_at(c.form(), p).f.order();
}

int branch_count(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  require_on_curve(c, p);
  return germ_branch_count(germ_at(c.form(), p), budget);
}

bool is_unibranched(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  return branch_count(c, p, budget) == 1;
}

PointType point_type(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  require_on_curve(c, p);
  return germ_point_type(germ_at(c.form(), p), budget);
}

int local_intersection_multiplicity(const PlaneCurve& c, const PlaneCurve& b, const ProjectivePoint& p,
                                    const Budget& budget) {
  if (!contains(c, p) || !contains(b, p)) return 0;
  Poly g = poly_gcd(c.form(), b.form());
  if (g.degree() > 0 && g.eval(p.vec()).is_zero())
    throw CommonComponentError("curves share a component through " + p.to_string());
  const int guard = c.degree() * b.degree() + 2;
  return intersection_rec(germ_at(c.form(), p), germ_at(b.form(), p), 0, guard, budget);
}

PlaneCurve tangent_line(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  require_on_curve(c, p);
  LocalGerm g = germ_at(c.form(), p);
  if (germ_branch_count(g, budget) != 1) throw PreconditionError("point " + p.to_string() + " is not unibranched");
  auto [a, b] = germ_tangent(g, budget);
  return line_through(p, chart_for(p).at(a, b));
}

int InfinitelyNearTree::delta() const { return tree_delta(root); }
int InfinitelyNearTree::branches() const { return tree_branches(root); }
int InfinitelyNearTree::size() const { return tree_size(root); }

InfinitelyNearTree infinitely_near_tree(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  require_on_curve(c, p);
  InfinitelyNearTree t;
  t.point = p;
  const int d = c.degree();
  t.root = build_tree(germ_at(c.form(), p), 0, d * (d - 1) / 2 + 2, 1, budget);
  return t;
}

int delta_invariant(const PlaneCurve& c, const ProjectivePoint& p, const Budget& budget) {
  return infinitely_near_tree(c, p, budget).delta();
}

KPoly restrict_to_y(const Poly& form, const FieldElement& x0, const FieldElement& z0) {
  const int dy = std::max(0, form.degree_in(1));
  std::vector<FieldElement> c(static_cast<size_t>(dy) + 1);
  for (const auto& [e, x] : form.terms()) c[e[1]] = c[e[1]] + x * x0.pow(e[0]) * z0.pow(e[2]);
  return KPoly(std::move(c));
}

std::vector<IntersectionPoint> intersection_points(const PlaneCurve& c, const PlaneCurve& b, const Budget& budget) {
  if (poly_gcd(c.form(), b.form()).degree() > 0) throw CommonComponentError("curves share a component");
  const FieldPtr k = common_field(c.field(), b.field());
  const int bezout = c.degree() * b.degree();
  for (auto [sa, sb] : shear_candidates()) {
    const std::vector<FieldElement> top{FieldElement(sa), FieldElement(1), FieldElement(sb)};
    if (c.form().eval(top).is_zero() || b.form().eval(top).is_zero()) continue;
    const Poly fc = shear_form(c.form(), sa, sb).in(k);
    const Poly fb = shear_form(b.form(), sa, sb).in(k);
    const Poly r = resultant(fc, fb, 1);
    if (r.is_zero() || r.degree() != bezout) throw InternalError("intersection: resultant has wrong degree");
    std::vector<IntersectionPoint> out;
    bool ok = true;
    int total = 0;
    for (const auto& root : binary_form_roots(r, k, budget)) {
      KPoly h = squarefree_part(gcd(restrict_to_y(fc, root.x0, root.z0), restrict_to_y(fb, root.x0, root.z0)));
      if (h.degree() != 1) {
        ok = false;
        break;
      }
      const FieldElement y0 = -h.coeff(0) / h.coeff(1);
      ProjectivePoint p = unshear_point(root.x0, y0, root.z0, sa, sb);
      const int mult = intersection_rec(germ_at(c.form(), p), germ_at(b.form(), p), 0, bezout + 2, budget);
      if (mult != root.multiplicity)
        throw InternalError("intersection multiplicity " + std::to_string(mult) +
                            " disagrees with resultant order " + std::to_string(root.multiplicity));
      out.push_back({p, root.orbit, mult});
      total += root.orbit * mult;
    }
    if (!ok) continue;
    if (total != bezout) throw InternalError("Bezout check failed in intersection_points");
    std::sort(out.begin(), out.end(), [](const IntersectionPoint& x, const IntersectionPoint& y) {
      if (x.orbit != y.orbit) return x.orbit < y.orbit;
      return point_key(x.point) < point_key(y.point);
    });
    return out;
  }
  throw InternalError("intersection_points: no separating projection found");
}

std::vector<SingularPoint> singular_points(const PlaneCurve& c, const Budget& budget) {
  if (!c.is_squarefree(budget)) throw PreconditionError("curve is not reduced");
  const FieldPtr k = c.field();
  const int d = c.degree();
  std::vector<SingularPoint> out;
  if (d <= 1) return out;
  for (auto [sa, sb] : shear_candidates()) {
    if (c.form().eval({FieldElement(sa), FieldElement(1), FieldElement(sb)}).is_zero()) continue;
    const Poly f = shear_form(c.form(), sa, sb).in(k);
    std::array<Poly, 3> partial{f.derivative(0), f.derivative(1), f.derivative(2)};
    // Candidate projections of singular points: common roots of Res_y(F, F_v).
    Poly r = resultant(f, partial[1], 1);
    if (r.is_zero()) throw InternalError("singular_points: discriminant vanishes for a reduced curve");
    KPoly acc;
    int inf_mult = 0;
    auto split = [&](const Poly& form) {
      std::vector<FieldElement> cs(static_cast<size_t>(form.degree()) + 1);
      for (const auto& [e, x] : form.terms()) cs[e[0]] = cs[e[0]] + x;
      KPoly u(std::move(cs));
      return std::make_pair(u, form.degree() - u.degree());
    };
    std::tie(acc, inf_mult) = split(r);
    for (int v : {0, 2}) {
      if (partial[v].is_zero()) continue;
      Poly rv = resultant(f, partial[v], 1);
      if (rv.is_zero()) continue;
      auto [u, im] = split(rv);
      acc = gcd(acc, u);
      inf_mult = std::min(inf_mult, im);
    }
    std::vector<BinaryRoot> lines;
    if (inf_mult > 0) lines.push_back({FieldElement(1), FieldElement(0), k, 1, inf_mult});
    if (acc.degree() >= 1)
      for (auto& root : roots_over(k, acc, budget))
        lines.push_back({root.ext.root, FieldElement(1), root.ext.field, root.ext.relative_degree, root.multiplicity});
    out.clear();
    for (const auto& line : lines) {
      KPoly h = restrict_to_y(f, line.x0, line.z0);
      for (const auto& p : partial) h = gcd(h, restrict_to_y(p, line.x0, line.z0));
      if (h.degree() < 1) continue;
      for (const auto& yr : roots_over(line.field, h, budget)) {
        ProjectivePoint p = unshear_point(line.x0.in(yr.ext.field), yr.ext.root, line.z0.in(yr.ext.field), sa, sb);
        LocalGerm g = germ_at(c.form(), p);
        TreeNode t = build_tree(g, 0, d * (d - 1) / 2 + 2, 1, budget);
        SingularPoint sp;
        sp.point = p;
        sp.orbit = line.orbit * yr.ext.relative_degree;
        sp.multiplicity = t.multiplicity;
        sp.delta = tree_delta(t);
        sp.branches = tree_branches(t);
        out.push_back(sp);
      }
    }
    std::sort(out.begin(), out.end(), [](const SingularPoint& x, const SingularPoint& y) {
      if (x.orbit != y.orbit) return x.orbit < y.orbit;
      return point_key(x.point) < point_key(y.point);
    });
    return out;
  }
  throw InternalError("singular_points: no admissible projection found");
}

int geometric_genus(const PlaneCurve& c, const Budget& budget) {
  if (!is_integral(c, budget)) throw PreconditionError("geometric_genus requires an integral curve");
  const int d = c.degree();
  int g = (d - 1) * (d - 2) / 2;
  for (const auto& s : singular_points(c, budget)) g -= s.orbit * s.delta;
  if (g < 0) throw InternalError("negative geometric genus");
  return g;
}

}  // namespace hypertan
