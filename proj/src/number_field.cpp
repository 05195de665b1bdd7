#include "hypertan/number_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hypertan/factor.hpp"

namespace hypertan {

namespace {

FieldPtr effective_field(const FieldElement& a) { return a.is_rational() ? nullptr : a.field(); }

QPoly reduce_rep(const FieldPtr& k, const QPoly& rep) {
  if (!k) {
    if (rep.degree() > 0) throw InternalError("non-constant representative over Q");
    return rep;
  }
  if (rep.degree() < k->degree()) return rep;
  return rep % k->minpoly();
}

// Horner evaluation of a Q-polynomial at an element of L.
QPoly eval_rep_at(const QPoly& p, const QPoly& at, const QPoly& modulus) {
  QPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = (acc * at + QPoly::constant(p.coeff(i))) % modulus;
  return acc;
}

std::pair<FieldElement, FieldElement> lift_pair(const FieldElement& a, const FieldElement& b) {
  FieldPtr k = common_field(effective_field(a), effective_field(b));
  return {a.in(k), b.in(k)};
}

// Newton interpolation through (i, values[i]), i = 0..n-1.
QPoly interpolate(const std::vector<Rational>& values) {
  const size_t n = values.size();
  std::vector<Rational> dd(values);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
  QPoly acc;
  for (size_t i = n; i-- > 0;) acc = acc * QPoly({Rational(-static_cast<long>(i)), Rational(1)}) + QPoly::constant(dd[i]);
  return acc;
}

KPoly monic_k(const KPoly& p) { return p.monic(); }

bool kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = compare(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<KPoly> trager(const FieldPtr& k, const KPoly& s, const Budget& budget) {
  const FieldElement alpha = FieldElement::generator(k);
  for (int attempt = 0; attempt < 40; ++attempt) {
    const int j = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
    KPoly g = s.compose_linear(FieldElement(1), -(FieldElement(j) * alpha));
    QPoly n = norm(k, g);
    if (gcd(n, n.derivative()).degree() > 0) continue;
    auto fac = factor_rational(n, budget.factor_degree);
    if (fac.factors.size() == 1) return {s};
    std::vector<KPoly> out;
    for (const auto& f : fac.factors) {
      KPoly h = gcd(g, to_kpoly(f.poly));
      out.push_back(monic_k(h.compose_linear(FieldElement(1), FieldElement(j) * alpha)));
    }
    return out;
  }
  throw InternalError("factor_over: no squarefree norm found");
}

Extension adjoin_irreducible(const FieldPtr& base, const KPoly& p_in, const std::string& name, const Budget& budget) {
  KPoly p = kpoly_in(p_in, base).monic();
  if (p.degree() < 1) throw InputError("adjoin_root: constant polynomial");
  if (p.degree() == 1) return {base, -p.coeff(0), 1};
  const std::string gen = name.empty() ? "w" : name;
  const int n = absolute_degree(base);
  const int e = p.degree();
  if (n * e > budget.field_degree)
    throw BudgetExceeded("adjoin_root: absolute degree " + std::to_string(n * e) + " exceeds field budget " +
                         std::to_string(budget.field_degree));
  if (!base) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.rational());
    auto field = std::make_shared<const NumberField>(gen, QPoly(std::move(c)));
    return {field, FieldElement::generator(field), e};
  }
  const FieldElement alpha = FieldElement::generator(base);
  for (int attempt = 0; attempt < 40; ++attempt) {
    const int j = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
    KPoly g = p.compose_linear(FieldElement(1), -(FieldElement(j) * alpha));
    QPoly nm = norm(base, g);
    if (gcd(nm, nm.derivative()).degree() > 0) continue;
    // Scratch field to locate the image of alpha.
    auto scratch = std::make_shared<const NumberField>(gen, nm);
    const FieldElement gamma = FieldElement::generator(scratch);
    KPoly x({FieldElement(0), FieldElement(1)});
    KPoly shifted = KPoly::constant(gamma) - x * KPoly::constant(FieldElement(j));
    KPoly h;
    for (int i = p.degree(); i >= 0; --i) {
      KPoly ci = to_kpoly(p.coeff(i).in(base).rep());
      h = h * shifted + ci;
    }
    KPoly lin = gcd(to_kpoly(base->minpoly()), h);
    if (lin.degree() != 1) throw InternalError("adjoin_root: primitive element recovery failed");
    QPoly alpha_img = (-lin.coeff(0)).in(scratch).rep();
    std::vector<NumberField::Subfield> subs{{base, alpha_img}};
    for (const auto& s : base->subfields()) subs.push_back({s.field, eval_rep_at(s.image, alpha_img, nm)});
    auto field = std::make_shared<const NumberField>(gen, nm, std::move(subs));
    FieldElement root = FieldElement(field, QPoly({Rational(0), Rational(1)}) - alpha_img * QPoly::constant(Rational(j)));
    return {field, root, e};
  }
  throw InternalError("adjoin_root: no primitive element found");
}

}  // namespace

// ---------------------------------------------------------------------------

NumberField::NumberField(std::string name, QPoly minpoly, std::vector<Subfield> subfields)
    : name_(std::move(name)), minpoly_(std::move(minpoly)), subfields_(std::move(subfields)) {}

bool NumberField::contains(const FieldPtr& k) const {
  if (!k || k.get() == this) return true;
  return image_of(k.get()) != nullptr;
}

const QPoly* NumberField::image_of(const NumberField* k) const {
  for (const auto& s : subfields_)
    if (s.field.get() == k) return &s.image;
  return nullptr;
}

bool field_contains(const FieldPtr& big, const FieldPtr& small) {
  if (!small) return true;
  if (!big) return false;
  return big->contains(small);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b || !b) return a;
  if (!a) return b;
  if (a->contains(b)) return a;
  if (b->contains(a)) return b;
  throw FieldMismatch("elements over unrelated number fields " + a->name() + " and " + b->name());
}

FieldPtr make_number_field(const std::string& name, const QPoly& minpoly, const Budget& budget) {
  if (minpoly.degree() < 1) throw InputError("minimal polynomial must have positive degree");
  if (minpoly.lead() != 1) throw InputError("minimal polynomial must be monic");
  if (minpoly.degree() > budget.field_degree)
    throw BudgetExceeded("field degree " + std::to_string(minpoly.degree()) + " exceeds budget");
  if (!is_irreducible_rational(minpoly, budget.factor_degree))
    throw InputError("minimal polynomial is reducible over Q");
  if (minpoly.degree() == 1) return nullptr;
  // Equal descriptions give the same field object, so curves read back from
  // text combine with the originals.
  static std::mutex mu;
  static std::map<std::string, std::weak_ptr<const NumberField>> interned;
  std::string key = name;
  for (const auto& c : minpoly.coeffs()) key += "," + to_string(c);
  std::lock_guard<std::mutex> lock(mu);
  if (auto k = interned[key].lock()) return k;
  auto k = std::make_shared<const NumberField>(name, minpoly);
  interned[key] = k;
  return k;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, QPoly rep) : field_(std::move(field)), rep_(reduce_rep(field_, rep)) {}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (!field) throw InputError("Q has no generator");
  return FieldElement(field, QPoly({Rational(0), Rational(1)}));
}

FieldElement FieldElement::from_coordinates(const FieldPtr& field, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != absolute_degree(field))
    throw InputError("coordinate vector length does not match field degree");
  return FieldElement(field, QPoly(coords));
}

std::vector<Rational> FieldElement::coordinates() const {
  std::vector<Rational> c(static_cast<size_t>(absolute_degree(field_)));
  for (int i = 0; i <= rep_.degree(); ++i) c[i] = rep_.coeff(i);
  return c;
}

Rational FieldElement::rational() const {
  if (!is_rational()) throw InputError("element " + to_string() + " is not rational");
  return rep_.coeff(0);
}

FieldElement FieldElement::in(const FieldPtr& target) const {
  if (field_ == target) return *this;
  if (is_rational()) {
    FieldElement r;
    r.field_ = target;
    r.rep_ = rep_;
    return r;
  }
  if (!target) throw FieldMismatch("irrational element cannot be moved to Q");
  const QPoly* img = target->image_of(field_.get());
  if (!img) throw FieldMismatch("field " + field_->name() + " does not embed into " + target->name());
  FieldElement r;
  r.field_ = target;
  r.rep_ = eval_rep_at(rep_, *img, target->minpoly());
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (is_rational()) {
    FieldElement r = *this;
    r.rep_ = QPoly::constant(1 / rep_.coeff(0));
    return r;
  }
  auto [g, s, t] = xgcd(rep_, field_->minpoly());
  (void)t;
  if (g.degree() != 0) throw InternalError("non-invertible element: minimal polynomial reducible");
  return FieldElement(field_, s);
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = FieldElement(1).in(field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return FieldElement(a.field_, a.rep_ + b.rep_);
  auto [x, y] = lift_pair(a, b);
  FieldElement r;
  r.field_ = x.field_;
  r.rep_ = x.rep_ + y.rep_;
  return r;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  r.rep_ = -a.rep_;
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return FieldElement(a.field_, a.rep_ * b.rep_);
  if (a.is_rational() || b.is_rational()) {
    const FieldElement& r = a.is_rational() ? a : b;
    const FieldElement& o = a.is_rational() ? b : a;
    FieldElement out = o;
    out.rep_ = r.is_zero() ? QPoly() : o.rep_.scaled(r.rep_.coeff(0));
    if (!out.field_) out.field_ = r.field_;
    return out;
  }
  auto [x, y] = lift_pair(a, b);
  return FieldElement(x.field_, x.rep_ * y.rep_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_ || (a.is_rational() && b.is_rational())) return a.rep_ == b.rep_;
  if (a.is_rational() != b.is_rational()) {
    // Different values unless the irrational one is actually rational, which
    // cannot happen for a reduced representative.
    return false;
  }
  auto [x, y] = lift_pair(a, b);
  return x.rep_ == y.rep_;
}

int compare(const FieldElement& a, const FieldElement& b) {
  auto [x, y] = lift_pair(a, b);
  const int n = std::max(x.rep_.degree(), y.rep_.degree());
  for (int i = n; i >= 0; --i) {
    int c = cmp(x.rep_.coeff(i), y.rep_.coeff(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return hypertan::to_string(rep_.coeff(0));
  const std::string& name = field_->name();
  std::string out;
  for (int i = rep_.degree(); i >= 0; --i) {
    Rational c = rep_.coeff(i);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? name : name + "^" + std::to_string(i));
    if (i == 0)
      out += hypertan::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += hypertan::to_string(a) + "*" + mono;
  }
  return out;
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  if (!from || a.is_rational()) return a.in(to);
  FieldElement x = a.in(from);
  FieldElement acc = FieldElement(0).in(to);
  const QPoly& r = x.rep();
  for (int i = r.degree(); i >= 0; --i) acc = acc * image + FieldElement(r.coeff(i));
  return acc.in(to);
}

// ---------------------------------------------------------------------------

Rational resultant(const QPoly& a_in, const QPoly& b_in) {
  QPoly a = a_in, b = b_in;
  if (a.is_zero() || b.is_zero()) return Rational(0);
  Rational acc = 1;
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      Rational p = 1;
      for (int i = 0; i < da; ++i) p *= b.lead();
      return acc * p;
    }
    if (da == 0) {
      Rational p = 1;
      for (int i = 0; i < db; ++i) p *= a.lead();
      return acc * p;
    }
    if (da < db) {
      if ((da * db) % 2) acc = -acc;
      std::swap(a, b);
      continue;
    }
    QPoly r = a % b;
    if (r.is_zero()) return Rational(0);
    if ((da * db) % 2) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

QPoly norm(const FieldPtr& k, const KPoly& f) {
  if (!k) {
    std::vector<Rational> c;
    for (const auto& x : f.coeffs()) c.push_back(x.rational());
    return QPoly(std::move(c));
  }
  if (f.is_zero()) return {};
  const int n = k->degree();
  const int d = f.degree() * n;
  std::vector<Rational> values;
  values.reserve(d + 1);
  KPoly fk = kpoly_in(f, k);
  for (int t = 0; t <= d; ++t) {
    FieldElement v = fk.eval(FieldElement(t)).in(k);
    values.push_back(v.is_zero() ? Rational(0) : resultant(k->minpoly(), v.rep()));
  }
  return interpolate(values);
}

std::vector<KFactor> factor_over(const FieldPtr& k, const KPoly& f, const Budget& budget) {
  if (f.is_zero()) throw InputError("factor_over: zero polynomial");
  std::vector<KFactor> out;
  if (!k) {
    for (auto& q : factor_rational(norm(nullptr, f), budget.factor_degree).factors)
      out.push_back({to_kpoly(q.poly), q.exponent});
    return out;
  }
  KPoly fk = kpoly_in(f, k);
  for (const auto& [s, e] : squarefree_decomposition(fk)) {
    if (s.degree() * k->degree() > budget.factor_degree)
      throw BudgetExceeded("factor_over: norm degree " + std::to_string(s.degree() * k->degree()) +
                           " exceeds factorization budget");
    if (s.degree() == 1) {
      out.push_back({monic_k(s), e});
      continue;
    }
    for (auto& g : trager(k, monic_k(s), budget)) out.push_back({std::move(g), e});
  }
  std::sort(out.begin(), out.end(), [](const KFactor& a, const KFactor& b) {
    if (a.poly != b.poly) return kpoly_less(a.poly, b.poly);
    return a.exponent < b.exponent;
  });
  return out;
}

bool is_irreducible_over(const FieldPtr& k, const KPoly& f, const Budget& budget) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fac = factor_over(k, f, budget);
  return fac.size() == 1 && fac[0].exponent == 1;
}

Extension adjoin_root(const FieldPtr& base, const KPoly& p, const std::string& name, const Budget& budget) {
  if (p.degree() < 1) throw InputError("adjoin_root: constant polynomial");
  if (p.degree() > 1 && !is_irreducible_over(base, p, budget))
    throw InputError("adjoin_root: polynomial is reducible over the base field");
  return adjoin_irreducible(base, p, name, budget);
}

std::vector<AlgebraicRoot> roots_over(const FieldPtr& k, const KPoly& f, const Budget& budget) {
  std::vector<AlgebraicRoot> out;
  for (const auto& fac : factor_over(k, f, budget))
    out.push_back({adjoin_irreducible(k, fac.poly, "", budget), fac.exponent, fac.poly});
  return out;
}

KPoly to_kpoly(const QPoly& p) {
  std::vector<FieldElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return KPoly(std::move(c));
}

KPoly kpoly_in(const KPoly& p, const FieldPtr& k) {
  std::vector<FieldElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.in(k));
  return KPoly(std::move(c));
}

FieldPtr kpoly_field(const KPoly& p) {
  FieldPtr k;
  for (const auto& x : p.coeffs())
    if (!x.is_rational()) k = common_field(k, x.field());
  return k;
}

}  // namespace hypertan
