#pragma once

// Reference computations used to cross-check the library. They work on plain
// rational matrices and truncated power series and share no code with it.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypertan/poly.hpp"

namespace oracle {

using Q = mpq_class;
using UPoly = std::vector<Q>;  // low to high

/// Affine polynomial in x, y: (i, j) -> coefficient of x^i y^j.
using Affine = std::map<std::pair<int, int>, Q>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int total_degree(const Affine& f) {
  int d = -1;
  for (const auto& [e, c] : f)
    if (c != 0) d = std::max(d, e.first + e.second);
  return d;
}

inline int degree_y(const Affine& f) {
  int d = -1;
  for (const auto& [e, c] : f)
    if (c != 0) d = std::max(d, e.second);
  return d;
}

/// Dehomogenize a rational form at z = 1.
inline Affine affine_of(const hypertan::Poly& form) {
  Affine out;
  for (const auto& [e, c] : form.terms()) out[{e[0], e[1]}] += c.rational();
  return out;
}

/// f(x + c y, y).
inline Affine shear(const Affine& f, const Q& c) {
  Affine out;
  for (const auto& [e, a] : f) {
    // (x + c y)^i y^j
    Q binom = 1;
    for (int k = 0; k <= e.first; ++k) {
      Q cpow = 1;
      for (int t = 0; t < k; ++t) cpow *= c;
      out[{e.first - k, e.second + k}] += a * binom * cpow;
      binom = binom * (e.first - k) / (k + 1);
    }
  }
  return out;
}

inline UPoly at_x(const Affine& f, const Q& x0) {
  UPoly p(std::max(degree_y(f), 0) + 1);
  for (const auto& [e, c] : f) {
    Q v = c;
    for (int t = 0; t < e.first; ++t) v *= x0;
    p[e.second] += v;
  }
  return p;
}

inline Q determinant(std::vector<std::vector<Q>> m) {
  const size_t n = m.size();
  Q det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Q f = m[r][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

/// Sylvester resultant of two univariate polynomials of formal degrees p, q.
inline Q sylvester(const UPoly& a, int p, const UPoly& b, int q) {
  const int n = p + q;
  if (n == 0) return 1;
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0));
  auto coeff = [](const UPoly& u, int i) { return i < static_cast<int>(u.size()) ? u[i] : Q(0); };
  for (int r = 0; r < q; ++r)
    for (int i = 0; i <= p; ++i) m[r][r + i] = coeff(a, p - i);
  for (int r = 0; r < p; ++r)
    for (int i = 0; i <= q; ++i) m[q + r][r + i] = coeff(b, q - i);
  return determinant(m);
}

/// Res_y(f, g) as a polynomial in x, by evaluation at enough integers and
/// Newton interpolation.
inline UPoly resultant_in_x(const Affine& f, const Affine& g) {
  const int p = degree_y(f), q = degree_y(g);
  const int bound = total_degree(f) * total_degree(g) + 1;
  std::vector<Q> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    xs.push_back(k);
    ys.push_back(sylvester(at_x(f, k), p, at_x(g, k), q));
  }
  // divided differences
  std::vector<Q> dd = ys;
  for (size_t j = 1; j < xs.size(); ++j)
    for (size_t i = xs.size() - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UPoly out{dd.back()};
  for (size_t k = xs.size() - 1; k-- > 0;) {
    UPoly next(out.size() + 1, 0);
    for (size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] -= out[i] * xs[k];
    }
    next[0] += dd[k];
    out = next;
  }
  trim(out);
  return out;
}

inline UPoly poly_rem(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Q f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline UPoly poly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_rem(a, b);
    a = b;
    b = r;
  }
  return a;
}

/// Intersection multiplicity at the origin as the x-adic valuation of the
/// resultant after a shear that isolates the origin in its fiber. Returns
/// nullopt when the curves share a component through the origin.
inline std::optional<int> resultant_multiplicity(const Affine& f, const Affine& g) {
  for (int c : {0, 1, -1, 2, -2, 3, 5, -7, 11}) {
    const Affine fs = shear(f, c), gs = shear(g, c);
    if (degree_y(fs) != total_degree(fs) || degree_y(gs) != total_degree(gs)) continue;
    UPoly h = poly_gcd(at_x(fs, 0), at_x(gs, 0));
    // the only common root on x = 0 must be y = 0
    bool isolated = true;
    for (size_t i = 0; i + 1 < h.size(); ++i)
      if (h[i] != 0) isolated = false;
    if (!isolated) continue;
    UPoly r = resultant_in_x(fs, gs);
    if (r.empty()) return std::nullopt;
    int v = 0;
    while (r[v] == 0) ++v;
    return v;
  }
  throw std::runtime_error("resultant oracle found no isolating shear");
}

// ---------------------------------------------------------------------------
// Branches given by a primitive parametrization t -> (u(t), v(t)).

struct Series {
  std::vector<Q> c;  // c[k] is the coefficient of t^k, truncated
  int ord() const {
    for (size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) return static_cast<int>(k);
    return -1;
  }
};

inline Series series(int len, std::initializer_list<std::pair<int, Q>> terms) {
  Series s{std::vector<Q>(len, 0)};
  for (const auto& [k, a] : terms)
    if (k < len) s.c[k] += a;
  return s;
}

/// a - f b, truncated to the shorter of the two.
inline Series sub(const Series& a, const Series& b, const Q& f) {
  Series r{std::vector<Q>(a.c.begin(), a.c.begin() + std::min(a.c.size(), b.c.size()))};
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] -= f * b.c[k];
  return r;
}

/// a / b when ord b <= ord a, by long division of truncated series.
inline Series divide(const Series& a, const Series& b) {
  const int s = b.ord();
  const size_t len = a.c.size() - s;
  Series q{std::vector<Q>(len, 0)};
  std::vector<Q> rem(a.c.begin(), a.c.end());
  for (size_t k = 0; k < len; ++k) {
    const Q f = rem[k + s] / b.c[s];
    q.c[k] = f;
    for (size_t i = s; i < b.c.size() && k + i < rem.size(); ++i) rem[k + i] -= f * b.c[i];
  }
  return q;
}

struct Branch {
  Series u, v;
};

struct BranchType {
  int m = 0, n = 0;
  bool vertical = false;  // tangent is u = 0
  Q slope = 0;            // tangent v = slope * u otherwise
};

inline BranchType branch_type(const Branch& b) {
  const int ou = b.u.ord(), ov = b.v.ord();
  BranchType t;
  if (ov < ou || ou < 0) {
    t.m = ov;
    t.vertical = true;
    t.n = ou;
    return t;
  }
  t.m = ou;
  if (ov > ou) {
    t.n = ov;
    return t;
  }
  t.slope = b.v.c[ov] / b.u.c[ou];
  t.n = sub(b.v, b.u, t.slope).ord();
  return t;
}

struct BlowupObservation {
  BranchType child;
  bool tangent_to_exceptional = false;
  bool tangent_to_strict_line = false;
};

/// Blow up at the origin and follow the branch to its infinitely near point.
inline BlowupObservation blow_up(const Branch& b) {
  const BranchType t = branch_type(b);
  BlowupObservation o;
  Branch child;
  if (t.vertical) {
    // chart u = u1 v; exceptional v = 0; strict transform of u = 0 is u1 = 0
    child = {divide(b.u, b.v), b.v};
    o.child = branch_type(child);
    o.tangent_to_exceptional = !o.child.vertical && o.child.slope == 0;
    o.tangent_to_strict_line = o.child.vertical;
  } else {
    // chart v = (slope + v1) u; exceptional u = 0; strict line v1 = 0
    child = {b.u, divide(sub(b.v, b.u, t.slope), b.u)};
    o.child = branch_type(child);
    o.tangent_to_exceptional = o.child.vertical;
    o.tangent_to_strict_line = !o.child.vertical && o.child.slope == 0;
  }
  return o;
}

/// Delta invariant of y^a = x^b: ((a-1)(b-1) + gcd(a,b) - 1) / 2, with gcd(a,b) branches.
inline int quasi_homogeneous_delta(int a, int b) { return ((a - 1) * (b - 1) + std::gcd(a, b) - 1) / 2; }

/// Delta of a branch with one characteristic Puiseux pair: multiplicity n and
/// characteristic exponent beta (in units of x^(1/n)).
inline int one_pair_delta(int n, int beta) { return (n - 1) * (beta - 1) / 2; }

}  // namespace oracle
