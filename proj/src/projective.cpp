#include "hypertan/projective.hpp"

#include <sstream>

namespace hypertan {

ProjectivePoint::ProjectivePoint(FieldElement x, FieldElement y, FieldElement z) : c_{x, y, z} {
  int last = 2;
  while (last >= 0 && c_[last].is_zero()) --last;
  if (last < 0) throw InputError("projective point with all coordinates zero");
  FieldPtr k = field();
  const FieldElement inv = c_[last].inverse();
  for (auto& v : c_) v = (v * inv).in(k);
}

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("point \"" + text + "\" must have the form x:y:z");
  return ProjectivePoint(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

FieldPtr ProjectivePoint::field() const {
  FieldPtr k;
  for (const auto& v : c_)
    if (!v.is_rational()) k = common_field(k, v.field());
  return k;
}

bool ProjectivePoint::is_rational() const { return c_[0].is_rational() && c_[1].is_rational() && c_[2].is_rational(); }

ProjectivePoint ProjectivePoint::in(const FieldPtr& k) const {
  ProjectivePoint p = *this;
  for (auto& v : p.c_) v = v.in(k);
  return p;
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
}

int compare(const ProjectivePoint& a, const ProjectivePoint& b) {
  for (int i = 0; i < 3; ++i) {
    int c = compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ":";
    out += c_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

PlaneCurve::PlaneCurve(const Poly& form) {
  if (form.nvars() != 3) throw InputError("curve form must be in x, y, z");
  if (form.is_zero()) throw InputError("curve form is zero");
  if (!form.is_homogeneous()) throw InputError("curve form is not homogeneous");
  if (form.degree() < 1) throw InputError("curve form is constant");
  form_ = form.normalized();
}

const std::vector<PolyFactor>& PlaneCurve::components(const Budget& budget) const {
  std::call_once(cache_->once, [&] { cache_->components = factor_poly(form_, form_.field(), budget); });
  return cache_->components;
}

bool PlaneCurve::is_squarefree(const Budget& budget) const {
  for (const auto& f : components(budget))
    if (f.exponent > 1) return false;
  return true;
}

PlaneCurve curve_product(const std::vector<PlaneCurve>& parts) {
  Poly acc = Poly::constant(FieldElement(1), 3);
  for (const auto& c : parts) acc = acc * c.form();
  return PlaneCurve(acc);
}

bool contains(const PlaneCurve& c, const ProjectivePoint& p) { return c.form().eval(p.vec()).is_zero(); }

PlaneCurve line_from_coefficients(const std::array<FieldElement, 3>& abc) {
  Poly l(3);
  for (int i = 0; i < 3; ++i) l += Poly::variable(i, 3).scaled(abc[i]);
  return PlaneCurve(l);
}

PlaneCurve line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p == q) throw PreconditionError("line_through: points coincide");
  std::array<FieldElement, 3> n{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  return line_from_coefficients(n);
}

std::array<FieldElement, 3> line_coefficients(const PlaneCurve& line) {
  if (line.degree() != 1) throw InputError("curve is not a line");
  return {line.form().coeff({1, 0, 0}), line.form().coeff({0, 1, 0}), line.form().coeff({0, 0, 1})};
}

ProjectivePoint meet(const PlaneCurve& l1, const PlaneCurve& l2) {
  auto a = line_coefficients(l1), b = line_coefficients(l2);
  std::array<FieldElement, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) throw PreconditionError("meet: lines coincide");
  return ProjectivePoint(n);
}

bool is_integral(const PlaneCurve& c, const Budget& budget) {
  const auto& comps = c.components(budget);
  return comps.size() == 1 && comps[0].exponent == 1;
}

// ---------------------------------------------------------------------------

Projectivity::Projectivity() {
  m_.assign(3, Vector(3, FieldElement(0)));
  for (int i = 0; i < 3; ++i) m_[i][i] = FieldElement(1);
  inv_ = m_;
}

Projectivity::Projectivity(Matrix m) : m_(std::move(m)) {
  if (m_.size() != 3 || m_[0].size() != 3 || m_[1].size() != 3 || m_[2].size() != 3)
    throw InputError("projectivity must be a 3x3 matrix");
  if (determinant(m_).is_zero()) throw InputError("projectivity matrix is singular");
  inv_ = hypertan::inverse(m_);
}

Projectivity Projectivity::inverse() const { return Projectivity(inv_); }

Projectivity Projectivity::then(const Projectivity& next) const { return Projectivity(multiply(next.m_, m_)); }

ProjectivePoint Projectivity::apply(const ProjectivePoint& p) const {
  Vector v = hypertan::apply(m_, p.vec());
  return ProjectivePoint(v[0], v[1], v[2]);
}

Poly Projectivity::apply_form(const Poly& form) const {
  // (T.F)(X) = F(T^{-1} X)
  std::vector<Poly> images;
  for (int i = 0; i < 3; ++i) {
    Poly row(3);
    for (int j = 0; j < 3; ++j) row += Poly::variable(j, 3).scaled(inv_[i][j]);
    images.push_back(row);
  }
  return form.compose(images);
}

PlaneCurve Projectivity::apply(const PlaneCurve& c) const { return PlaneCurve(apply_form(c.form())); }

Projectivity frame_normalize(const ProjectivePoint& p, const PlaneCurve& lp, const ProjectivePoint& q,
                             const PlaneCurve& lq, const std::array<Rational, 2>& scales) {
  if (lp.degree() != 1 || lq.degree() != 1) throw InputError("frame_normalize: Lp and Lq must be lines");
  if (p == q) throw PreconditionError("frame_normalize: p = q");
  if (lp == lq) throw PreconditionError("frame_normalize: Lp = Lq");
  if (!contains(lp, p)) throw PreconditionError("frame_normalize: p is not on Lp");
  if (!contains(lq, q)) throw PreconditionError("frame_normalize: q is not on Lq");
  if (contains(lq, p)) throw PreconditionError("frame_normalize: p lies on Lq");
  if (contains(lp, q)) throw PreconditionError("frame_normalize: q lies on Lp");
  if (sgn(scales[0]) == 0 || sgn(scales[1]) == 0) throw InputError("frame_normalize: zero scale");
  const ProjectivePoint r = meet(lp, lq);
  Matrix m(3, Vector(3));
  for (int i = 0; i < 3; ++i) {
    m[i][0] = r[i];
    m[i][1] = p[i] * FieldElement(scales[0]);
    m[i][2] = q[i] * FieldElement(scales[1]);
  }
  return Projectivity(m).inverse();
}

}  // namespace hypertan
