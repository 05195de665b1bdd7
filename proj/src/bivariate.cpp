#include "hypertan/bivariate.hpp"

#include <algorithm>

namespace hypertan {

namespace {

// Polynomial in y whose coefficients are polynomials in x (or in a shifted
// variable t); index j holds the coefficient of y^j.
using Bi = std::vector<KPoly>;

void bi_trim(Bi& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int bdeg(const Bi& a) { return static_cast<int>(a.size()) - 1; }

Bi bi_sub(const Bi& a, const Bi& b) {
  Bi c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = c[i] - b[i];
  bi_trim(c);
  return c;
}

KPoly truncate(const KPoly& p, int prec) {
  if (p.degree() < prec) return p;
  return KPoly(std::vector<FieldElement>(p.coeffs().begin(), p.coeffs().begin() + prec));
}

Bi bi_mul(const Bi& a, const Bi& b, int prec = -1) {
  if (a.empty() || b.empty()) return {};
  Bi c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] = c[i + j] + a[i] * b[j];
      if (prec > 0) c[i + j] = truncate(c[i + j], prec);
    }
  }
  bi_trim(c);
  return c;
}

Bi bi_scale(const Bi& a, const KPoly& s) {
  Bi c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  bi_trim(c);
  return c;
}

Bi bi_derivative(const Bi& a) {
  if (a.size() <= 1) return {};
  Bi d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i].scaled(FieldElement(static_cast<int>(i)));
  bi_trim(d);
  return d;
}

// Normalizes so that the leading coefficient in y is 1 when it is a constant.
Bi bi_monic(const Bi& a) {
  if (a.empty() || a.back().degree() != 0) return a;
  return bi_scale(a, KPoly::constant(a.back().lead().inverse()));
}

std::optional<Bi> bi_div_monic(Bi a, const Bi& b);

KPoly eval_x(const Bi& a, const FieldElement& x0) {
  std::vector<FieldElement> c;
  for (const auto& k : a) c.push_back(k.eval(x0));
  return KPoly(std::move(c));
}

// Newton interpolation of values[i] at points xs[i].
KPoly interpolate_k(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& values) {
  const size_t n = xs.size();
  std::vector<FieldElement> dd(values);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  KPoly acc;
  for (size_t i = n; i-- > 0;) acc = acc * KPoly::linear_root(xs[i]) + KPoly::constant(dd[i]);
  return acc;
}

// gcd of a (monic in y) and b, by evaluation in x and interpolation. The
// result is monic in y.
Bi bi_gcd(const Bi& a, const Bi& b) {
  if (b.empty()) return a;
  int degx = 0;
  for (const auto& c : a) degx = std::max(degx, c.degree());
  const size_t need = static_cast<size_t>(degx) + 1;
  int best = bdeg(a) + 1;
  std::vector<FieldElement> xs;
  std::vector<KPoly> gs;
  for (int attempt = 0; attempt < 4 * static_cast<int>(need) + 400; ++attempt) {
    const int v = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
    FieldElement x0(v);
    KPoly g = gcd(eval_x(a, x0), eval_x(b, x0));
    if (g.degree() > best) continue;
    if (g.degree() < best) {
      best = g.degree();
      xs.clear();
      gs.clear();
    }
    if (best == 0) return Bi{KPoly::constant(FieldElement(1))};
    xs.push_back(x0);
    gs.push_back(g);
    if (xs.size() < need || (xs.size() - need) % 2 != 0) continue;
    Bi cand(static_cast<size_t>(best) + 1);
    for (int j = 0; j <= best; ++j) {
      std::vector<FieldElement> vals;
      for (const auto& g2 : gs) vals.push_back(g2.coeff(j));
      cand[j] = interpolate_k(xs, vals);
    }
    bi_trim(cand);
    if (bi_div_monic(a, cand) && bi_div_monic(b, cand)) return cand;
  }
  throw InternalError("bivariate gcd: interpolation did not stabilize");
}

// Exact division by a polynomial monic in y.
std::optional<Bi> bi_div_monic(Bi a, const Bi& b) {
  const int db = bdeg(b);
  if (bdeg(a) < db) {
    if (a.empty()) return Bi{};
    return std::nullopt;
  }
  Bi q(static_cast<size_t>(bdeg(a) - db + 1));
  while (!a.empty() && bdeg(a) >= db) {
    const int shift = bdeg(a) - db;
    KPoly la = a.back();
    q[shift] = la;
    for (int j = 0; j <= db; ++j) a[shift + j] = a[shift + j] - la * b[j];
    bi_trim(a);
  }
  if (!a.empty()) return std::nullopt;
  bi_trim(q);
  return q;
}

Bi bi_div_exact(const Bi& a, const Bi& b) {
  auto q = bi_div_monic(a, b);
  if (!q) throw InternalError("bivariate division not exact");
  return *q;
}

Bi bi_shift_x(const Bi& a, const FieldElement& x0) {
  Bi out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].compose_linear(FieldElement(1), x0);
  return out;
}

Bi from_kpoly_y(const KPoly& p) {
  Bi out;
  for (const auto& c : p.coeffs()) out.push_back(KPoly::constant(c));
  bi_trim(out);
  return out;
}

KPoly coeff_t(const Bi& a, int k, size_t size) {
  std::vector<FieldElement> c(size);
  for (size_t j = 0; j < a.size() && j < size; ++j) c[j] = a[j].coeff(k);
  return KPoly(std::move(c));
}

// Irreducible factors of a squarefree polynomial monic in y, over k.
std::vector<Bi> factor_monic_squarefree(const Bi& f, const FieldPtr& k, const Budget& budget) {
  const int d = bdeg(f);
  if (d <= 1) return {f};
  int degx = 0;
  for (const auto& c : f) degx = std::max(degx, c.degree());
  if (degx == 0) {
    // Coefficients are constants: a univariate problem in y.
    std::vector<FieldElement> c;
    for (const auto& x : f) c.push_back(x.coeff(0));
    std::vector<Bi> out;
    for (auto& g : factor_over(k, KPoly(std::move(c)), budget)) out.push_back(from_kpoly_y(g.poly));
    return out;
  }
  FieldElement x0;
  KPoly f0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 200) throw InternalError("factor: no squarefree specialization found");
    const int v = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
    x0 = FieldElement(v);
    f0 = eval_x(f, x0);
    if (gcd(f0, f0.derivative()).degree() == 0) break;
  }
  auto facs = factor_over(k, f0, budget);
  if (facs.size() == 1) return {f};
  const size_t r = facs.size();
  std::vector<KPoly> u(r);
  for (size_t i = 0; i < r; ++i) u[i] = facs[i].poly;

  // s_i = (prod_{j != i} u_j)^{-1} mod u_i
  std::vector<KPoly> s(r);
  for (size_t i = 0; i < r; ++i) {
    KPoly others = KPoly::constant(FieldElement(1));
    for (size_t j = 0; j < r; ++j)
      if (j != i) others = (others * u[j]) % u[i];
    auto [g, a, b] = xgcd(others, u[i]);
    (void)b;
    if (g.degree() != 0) throw InternalError("factor: modular factors not coprime");
    s[i] = a;
  }

  Bi F = bi_shift_x(f, x0);  // variable t = x - x0
  const int prec = degx + 1;
  std::vector<Bi> G(r);
  for (size_t i = 0; i < r; ++i) G[i] = from_kpoly_y(u[i]);
  for (int k2 = 1; k2 < prec; ++k2) {
    Bi prod{KPoly::constant(FieldElement(1))};
    for (const auto& g : G) prod = bi_mul(prod, g, k2 + 1);
    Bi e = bi_sub(F, prod);
    KPoly ek = coeff_t(e, k2, static_cast<size_t>(d) + 1);
    if (ek.is_zero()) continue;
    KPoly tk = KPoly::monomial(FieldElement(1), k2);
    for (size_t i = 0; i < r; ++i) {
      KPoly delta = (ek * s[i]) % u[i];
      for (int j = 0; j <= delta.degree(); ++j) {
        if (static_cast<size_t>(j) >= G[i].size()) G[i].resize(j + 1);
        G[i][j] = G[i][j] + tk.scaled(delta.coeff(j));
      }
    }
  }

  std::vector<Bi> out;
  std::vector<size_t> remaining(r);
  for (size_t i = 0; i < r; ++i) remaining[i] = i;
  Bi rest = F;
  size_t size = 1;
  long checks = 0;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      if (++checks > (1L << 20)) throw BudgetExceeded("factor: recombination exceeds subset cap");
      Bi cand{KPoly::constant(FieldElement(1))};
      for (size_t i : idx) cand = bi_mul(cand, G[remaining[i]], prec);
      if (auto q = bi_div_monic(rest, cand)) {
        out.push_back(cand);
        rest = *q;
        std::vector<size_t> keep;
        for (size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[pos] == remaining.size() - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (bdeg(rest) > 0) out.push_back(rest);
  for (auto& g : out) g = bi_shift_x(g, -x0);
  return out;
}

// ---------------------------------------------------------------------------
// Forms <-> monic bivariate polynomials through a shear.

struct Shear {
  int a = 0, b = 0;
};

Poly apply_shear(const Poly& f, const Shear& s, bool inverse) {
  const int sign = inverse ? -1 : 1;
  Poly x = Poly::variable(0, 3), y = Poly::variable(1, 3), z = Poly::variable(2, 3);
  return f.compose({x + y.scaled(FieldElement(sign * s.a)), y, z + y.scaled(FieldElement(sign * s.b))});
}

Shear choose_shear(const std::vector<const Poly*>& forms) {
  for (int n = 0; n < 400; ++n) {
    Shear s{(n % 7) - 3, ((n / 7) % 7) - 3};
    if (n == 0) s = {0, 0};
    bool ok = true;
    for (const Poly* f : forms)
      if (f->eval({FieldElement(s.a), FieldElement(1), FieldElement(s.b)}).is_zero()) ok = false;
    if (ok) return s;
  }
  throw InternalError("no admissible shear found");
}

Bi to_bi(const Poly& form, const FieldPtr& k) {
  Poly p = form.in(k).dehomogenize(2);
  Bi out(static_cast<size_t>(std::max(0, p.degree_in(1) + 1)));
  for (const auto& [e, c] : p.terms()) {
    KPoly term = KPoly::monomial(c, e[0]);
    out[e[1]] = out[e[1]] + term;
  }
  bi_trim(out);
  return bi_monic(out);
}

Poly from_bi(const Bi& b) {
  Poly p(2);
  for (size_t j = 0; j < b.size(); ++j)
    for (int i = 0; i <= b[j].degree(); ++i)
      if (!b[j].coeff(i).is_zero()) p += Poly::monomial(b[j].coeff(i), {i, static_cast<int>(j), 0}, 2);
  return p;
}

Poly bi_to_form(const Bi& b, const Shear& s) {
  Poly h = from_bi(b).homogenize(bdeg(b));
  return apply_shear(h, s, true).normalized();
}

Poly as_form(const Poly& f) {
  if (f.nvars() == 3) {
    if (!f.is_homogeneous()) throw InputError("expected a homogeneous form");
    return f;
  }
  if (f.nvars() == 2) return f.homogenize(f.degree());
  return f.with_nvars(2).homogenize(f.degree());
}

Poly back_from_form(const Poly& g, int nvars) {
  if (nvars == 3) return g;
  Poly p = g.dehomogenize(2);
  if (nvars == 1) p = p.with_nvars(1);
  return p.normalized();
}

bool cmp_factor(const PolyFactor& a, const PolyFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  int c = compare(a.poly, b.poly);
  if (c != 0) return c < 0;
  return a.exponent < b.exponent;
}

}  // namespace

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw InputError("squarefree_part of zero polynomial");
  if (f.degree() <= 0) return Poly::constant(FieldElement(1), f.nvars());
  Poly F = as_form(f);
  const FieldPtr k = F.field();
  Shear s = choose_shear({&F});
  Bi b = to_bi(apply_shear(F, s, false), k);
  Bi g = bi_gcd(b, bi_derivative(b));
  Bi sq = bi_div_exact(b, g);
  return back_from_form(bi_to_form(sq, s), f.nvars());
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw InputError("poly_gcd of zero polynomial");
  if (a.nvars() != b.nvars()) throw InputError("poly_gcd: variable count mismatch");
  if (a.degree() <= 0 || b.degree() <= 0) return Poly::constant(FieldElement(1), a.nvars());
  Poly A = as_form(a), B = as_form(b);
  const FieldPtr k = common_field(A.field(), B.field());
  Shear s = choose_shear({&A, &B});
  Bi g = bi_gcd(to_bi(apply_shear(A, s, false), k), to_bi(apply_shear(B, s, false), k));
  if (bdeg(g) <= 0) return Poly::constant(FieldElement(1), a.nvars());
  return back_from_form(bi_to_form(g, s), a.nvars());
}

std::vector<PolyFactor> factor_poly(const Poly& f, const FieldPtr& k_in, const Budget& budget) {
  if (f.is_zero()) throw InputError("factor_poly of zero polynomial");
  std::vector<PolyFactor> out;
  if (f.degree() <= 0) return out;
  Poly F = as_form(f);
  const FieldPtr k = common_field(k_in, F.field());
  Shear s = choose_shear({&F});
  Bi b = to_bi(apply_shear(F, s, false), k);
  Bi g = bi_gcd(b, bi_derivative(b));
  Bi sq = bi_div_exact(b, g);
  for (auto& h : factor_monic_squarefree(sq, k, budget)) {
    int e = 0;
    Bi rest = b;
    while (auto q = bi_div_monic(rest, h)) {
      rest = *q;
      ++e;
    }
    Poly form = bi_to_form(h, s);
    Poly back = back_from_form(form, f.nvars());
    if (back.degree() <= 0) continue;
    out.push_back({back, e});
  }
  std::sort(out.begin(), out.end(), cmp_factor);
  return out;
}

bool is_irreducible(const Poly& f, const FieldPtr& k, const Budget& budget) {
  auto fac = factor_poly(f, k, budget);
  return fac.size() == 1 && fac[0].exponent == 1;
}

}  // namespace hypertan
