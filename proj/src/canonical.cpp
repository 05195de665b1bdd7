#include "hypertan/canonical.hpp"

#include <algorithm>

#include "hypertan/linalg.hpp"

namespace hypertan {

namespace {

Vector coords_vector(const FieldElement& a, int n) {
  Vector v;
  std::vector<Rational> c = a.coordinates();
  c.resize(static_cast<size_t>(n));
  for (const auto& x : c) v.emplace_back(x);
  return v;
}

// Solves a = sum c_i e^i (i < k) over Q, if possible.
std::optional<std::vector<Rational>> express_in_powers(const FieldElement& a, const FieldElement& e, int k, int n) {
  Matrix m(static_cast<size_t>(n), Vector(static_cast<size_t>(k)));
  FieldElement power(1);
  for (int j = 0; j < k; ++j) {
    Vector col = coords_vector(power.in(e.field()), n);
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
    power = power * e;
  }
  LinearSolution s = solve_linear(m, coords_vector(a.in(e.field()), n));
  if (!s.consistent || !s.kernel.empty()) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& x : s.particular) out.push_back(x.rational());
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

QPoly minimal_polynomial(const FieldElement& a) {
  if (a.is_rational()) return QPoly({-a.rational(), Rational(1)});
  const int n = absolute_degree(a.field());
  for (int k = 2; k <= n; ++k) {
    if (n % k) continue;
    if (auto c = express_in_powers(a.pow(k), a, k, n)) {
      std::vector<Rational> m;
      for (const auto& x : *c) m.push_back(-x);
      m.push_back(Rational(1));
      return QPoly(std::move(m));
    }
  }
  throw InternalError("minimal_polynomial: no relation found");
}

OrbitKey orbit_key(const std::vector<FieldElement>& values) {
  OrbitKey out;
  bool rational = std::all_of(values.begin(), values.end(), [](const FieldElement& v) { return v.is_rational(); });
  if (rational) {
    std::vector<Rational> r;
    for (const auto& v : values) r.push_back(v.rational());
    out.key = "Q" + join(r);
    return out;
  }
  FieldPtr k;
  for (const auto& v : values)
    if (!v.is_rational()) k = common_field(k, v.field());
  const int n = absolute_degree(k);
  for (int r = 0; r < 64; ++r) {
    const int mult = (r % 2 == 0) ? r / 2 : -(r + 1) / 2;
    FieldElement e(0), scale(1);
    for (const auto& v : values) {
      e = e + scale * v;
      scale = scale * FieldElement(mult);
    }
    QPoly mu = minimal_polynomial(e.in(k));
    const int deg = mu.degree();
    std::string key = "K" + join(mu.coeffs()) + "|" + std::to_string(mult);
    bool ok = true;
    for (const auto& v : values) {
      auto c = express_in_powers(v, e.in(k), deg, n);
      if (!c) {
        ok = false;
        break;
      }
      key += "|" + join(*c);
    }
    if (!ok) continue;
    out.size = deg;
    out.key = key;
    return out;
  }
  throw InternalError("orbit_key: no primitive combination found");
}

OrbitKey orbit_key(const ProjectivePoint& p) { return orbit_key(std::vector<FieldElement>(p.coords().begin(), p.coords().end())); }

OrbitKey orbit_key(const PlaneCurve& c) {
  std::vector<FieldElement> values;
  std::string support;
  for (const auto& [e, x] : c.form().terms()) {
    values.push_back(x);
    support += std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ";";
  }
  OrbitKey k = orbit_key(values);
  k.key = support + "#" + k.key;
  return k;
}

bool curve_less(const PlaneCurve& a, const PlaneCurve& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return orbit_key(a) < orbit_key(b);
}

ProjectivePoint rationalize(const ProjectivePoint& p) { return p.is_rational() ? p.in(nullptr) : p; }

PlaneCurve rationalize(const PlaneCurve& c) {
  for (const auto& [e, x] : c.form().terms())
    if (!x.is_rational()) return c;
  return PlaneCurve(c.form().in(nullptr));
}

FieldElement embed(const FieldElement& a, const FieldElement& image) {
  if (a.is_rational()) return a;
  FieldElement acc(0), power(1);
  for (const auto& c : a.coordinates()) {
    acc = acc + FieldElement(c) * power;
    power = power * image;
  }
  return acc;
}

std::vector<std::pair<ProjectivePoint, ProjectivePoint>> pair_orbits(const ProjectivePoint& p,
                                                                    const ProjectivePoint& q,
                                                                    const Budget& budget) {
  const FieldPtr kp = p.field(), kq = q.field();
  if (!kq) return {{p, q}};
  if (!kp) return {{p, q}};
  std::vector<std::pair<ProjectivePoint, ProjectivePoint>> out;
  for (const auto& f : factor_over(kp, to_kpoly(kq->minpoly()), budget)) {
    FieldPtr m;
    FieldElement root;
    if (f.poly.degree() == 1) {
      m = kp;
      root = -f.poly.coeff(0) / f.poly.coeff(1);
    } else {
      Extension ext = adjoin_root(kp, f.poly, "", budget);
      m = ext.field;
      root = ext.root;
    }
    std::array<FieldElement, 3> qc;
    for (int i = 0; i < 3; ++i) qc[i] = embed(q[i], root).in(m);
    out.emplace_back(p.in(m), ProjectivePoint(qc));
  }
  return out;
}

}  // namespace hypertan
