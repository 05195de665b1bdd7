#include "hypertan/poly.hpp"

#include <algorithm>

namespace hypertan {

namespace {

const char* kVarNames[3] = {"x", "y", "z"};

bool divides(const Exponent& a, const Exponent& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

Exponent sub(const Exponent& a, const Exponent& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Exponent add(const Exponent& a, const Exponent& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

void check_vars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw InputError("polynomials in different numbers of variables");
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > 3) throw InputError("polynomials support 1 to 3 variables");
}

Poly Poly::constant(const FieldElement& c, int nvars) { return monomial(c, {0, 0, 0}, nvars); }

Poly Poly::variable(int var, int nvars) {
  Exponent e{0, 0, 0};
  e[var] = 1;
  return monomial(FieldElement(1), e, nvars);
}

Poly Poly::monomial(const FieldElement& c, const Exponent& e, int nvars) {
  Poly p(nvars);
  for (int i = nvars; i < 3; ++i)
    if (e[i] != 0) throw InputError("exponent on a missing variable");
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

Poly Poly::from_kpoly(const KPoly& p, int var, int nvars) {
  Poly out(nvars);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    Exponent e{0, 0, 0};
    e[var] = i;
    out.terms_.emplace(e, p.coeff(i));
  }
  return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0}); }

int Poly::degree() const {
  int d = kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int Poly::order() const {
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e[0] + e[1] + e[2]);
  return terms_.empty() ? kZeroDegree : d;
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? kZeroDegree : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Poly::min_degree_in(int var) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return terms_.empty() ? kZeroDegree : d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

FieldElement Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

const FieldElement& Poly::leading_coeff() const {
  if (terms_.empty()) throw InputError("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const Exponent& Poly::leading_exponent() const {
  if (terms_.empty()) throw InputError("leading exponent of zero polynomial");
  return terms_.rbegin()->first;
}

FieldPtr Poly::field() const {
  FieldPtr k;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) k = common_field(k, c.field());
  return k;
}

Poly Poly::in(const FieldPtr& k) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c.in(k));
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& b) {
  check_vars(*this, b);
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  out += b;
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  out += -b;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_vars(a, b);
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      FieldElement p = ca * cb;
      auto [it, inserted] = out.terms_.emplace(add(ea, eb), p);
      if (!inserted) it->second += p;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (it->second.is_zero())
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

Poly operator*(const FieldElement& c, const Poly& a) { return a.scaled(c); }

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

int compare(const Poly& a, const Poly& b) {
  auto ia = a.terms_.rbegin();
  auto ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = compare(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia == a.terms_.rend() && ib == b.terms_.rend()) return 0;
  return ia == a.terms_.rend() ? -1 : 1;
}

Poly Poly::pow(int e) const {
  Poly result = constant(FieldElement(1), nvars_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::scaled(const FieldElement& c) const {
  Poly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, x * c);
  return out;
}

FieldElement Poly::eval(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluation point has wrong dimension");
  std::vector<std::vector<FieldElement>> powers(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    const int d = std::max(0, degree_in(v));
    powers[v].push_back(FieldElement(1));
    for (int i = 1; i <= d; ++i) powers[v].push_back(powers[v].back() * point[v]);
  }
  FieldElement acc(0);
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int v = 0; v < nvars_; ++v)
      if (e[v]) t = t * powers[v][e[v]];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(int var, const Poly& value) const {
  check_vars(*this, value);
  std::vector<Poly> images;
  for (int v = 0; v < nvars_; ++v) images.push_back(v == var ? value : variable(v, nvars_));
  return compose(images);
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw InputError("compose: wrong number of images");
  const int target = images.empty() ? nvars_ : images[0].nvars();
  std::vector<std::vector<Poly>> powers(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    const int d = std::max(0, degree_in(v));
    powers[v].push_back(constant(FieldElement(1), target));
    for (int i = 1; i <= d; ++i) powers[v].push_back(powers[v].back() * images[v]);
  }
  Poly acc(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(c, target);
    for (int v = 0; v < nvars_; ++v)
      if (e[v]) t = t * powers[v][e[v]];
    acc += t;
  }
  return acc;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.terms_.emplace(f, c * FieldElement(e[var]));
  }
  return out;
}

Poly Poly::homogenize(int degree) const {
  if (nvars_ != 2) throw InputError("homogenize expects a 2-variable polynomial");
  if (!is_zero() && degree < this->degree()) throw InputError("homogenize: target degree below polynomial degree");
  Poly out(3);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e[0], e[1], degree - e[0] - e[1]}, c);
  return out;
}

Poly Poly::dehomogenize(int var) const {
  if (nvars_ != 3) throw InputError("dehomogenize expects a 3-variable form");
  Poly out(2);
  for (const auto& [e, c] : terms_) {
    Exponent f{0, 0, 0};
    int k = 0;
    for (int v = 0; v < 3; ++v)
      if (v != var) f[k++] = e[v];
    out += monomial(c, f, 2);
  }
  return out;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  std::vector<Poly> out(static_cast<size_t>(std::max(0, degree_in(var) + 1)), Poly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].terms_.emplace(f, c);
  }
  return out;
}

Poly Poly::homogeneous_part(int deg) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] == deg) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

KPoly Poly::to_kpoly(int var) const {
  std::vector<FieldElement> c(static_cast<size_t>(std::max(0, degree_in(var) + 1)));
  for (const auto& [e, x] : terms_) {
    for (int v = 0; v < 3; ++v)
      if (v != var && e[v] != 0) throw InputError("to_kpoly: polynomial involves other variables");
    c[e[var]] = x;
  }
  return KPoly(std::move(c));
}

Poly Poly::with_nvars(int nvars) const {
  Poly out(nvars);
  for (const auto& [e, c] : terms_) out += monomial(c, e, nvars);
  return out;
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
  check_vars(*this, d);
  if (d.is_zero()) throw InputError("polynomial division by zero");
  Poly r = *this;
  Poly q(nvars_);
  const Exponent& de = d.leading_exponent();
  const FieldElement dinv = d.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Exponent re = r.leading_exponent();
    if (!divides(de, re)) return std::nullopt;
    Poly t = monomial(r.leading_coeff() * dinv, sub(re, de), nvars_);
    q += t;
    r -= t * d;
  }
  return q;
}

Poly Poly::exact_divide(const Poly& d) const {
  auto q = try_divide(d);
  if (!q) throw InternalError("inexact polynomial division");
  return *q;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string cs = c.to_string();
    bool neg = c.is_rational() && sgn(c.rational()) < 0;
    if (neg) cs = cs.substr(1);
    if (!c.is_rational()) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

Poly resultant(const Poly& f, const Poly& g, int var) {
  check_vars(f, g);
  if (f.is_zero() || g.is_zero()) throw InputError("resultant of a zero polynomial");
  const int m = f.degree_in(var);
  const int n = g.degree_in(var);
  const int nv = f.nvars();
  if (m == 0 && n == 0) return Poly::constant(FieldElement(1), nv);
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const int size = m + n;
  std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly(nv)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[i][i + k] = fc[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) mat[n + i][i + k] = gc[n - k];

  // Bareiss fraction-free elimination.
  Poly prev = Poly::constant(FieldElement(1), nv);
  bool negate = false;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < size; ++i)
        if (!mat[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Poly(nv);
      std::swap(mat[k], mat[piv]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Poly num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
        mat[i][j] = num.exact_divide(prev);
      }
      mat[i][k] = Poly(nv);
    }
    prev = mat[k][k];
  }
  Poly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

int valuation_at_zero(const KPoly& p) {
  if (p.is_zero()) return Poly::kZeroDegree;
  int v = 0;
  while (p.coeff(v).is_zero()) ++v;
  return v;
}

}  // namespace hypertan
