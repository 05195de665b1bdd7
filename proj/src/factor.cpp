#include "hypertan/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>

namespace hypertan {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;  // lowest degree first, trimmed
using ModPoly = std::vector<u64>;    // coefficients in [0, p)

constexpr long kRecombinationCap = 1L << 22;

// ---------------------------------------------------------------------------
// Arithmetic over Z/p, p an odd prime below 2^31.

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  trim(c);
  return c;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, u64 p) {
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly r(a);
  ModPoly q(a.size() - b.size() + 1, 0);
  const u64 inv = mod_inv(b.back(), p);
  const int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    if (!r[i]) continue;
    u64 f = r[i] * inv % p;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - f * b[j] % p) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& b, u64 p) { return mp_divmod(a, b, p).second; }

ModPoly mp_monic(const ModPoly& a, u64 p) {
  if (a.empty()) return a;
  ModPoly c(a);
  const u64 inv = mod_inv(a.back(), p);
  for (auto& x : c) x = x * inv % p;
  return c;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// (g, s, t) with s a + t b = g monic.
std::tuple<ModPoly, ModPoly, ModPoly> mp_xgcd(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = mod_inv(r0.back(), p);
  for (auto* v : {&r0, &s0, &t0})
    for (auto& x : *v) x = x * inv % p;
  return {r0, s0, t0};
}

ModPoly mp_powmod(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = mp_mod(base, m, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mp_mod(mp_mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_mod(mp_mul(r, base, p), m, p);
  }
  return r;
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  trim(d);
  return d;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over Z/p.
std::vector<ModPoly> mp_factor(const ModPoly& f, u64 p, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> dd;
  ModPoly rest = f;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (int i = 1; 2 * i <= deg(rest); ++i) {
    h = mp_powmod(h, Integer(static_cast<unsigned long>(p)), rest, p);
    ModPoly g = mp_gcd(rest, mp_sub(h, x, p), p);
    if (deg(g) > 0) {
      dd.emplace_back(g, i);
      rest = mp_divmod(rest, g, p).first;
      h = mp_mod(h, rest, p);
    }
  }
  if (deg(rest) > 0) dd.emplace_back(rest, deg(rest));

  std::vector<ModPoly> out;
  for (auto& [g, d] : dd) {
    std::vector<ModPoly> stack{g};
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    const Integer expo = (pd - 1) / 2;
    while (!stack.empty()) {
      ModPoly cur = std::move(stack.back());
      stack.pop_back();
      if (deg(cur) == d) {
        out.push_back(mp_monic(cur, p));
        continue;
      }
      for (;;) {
        ModPoly a(static_cast<size_t>(deg(cur)));
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = mp_powmod(a, expo, cur, p);
        b = mp_sub(b, ModPoly{1}, p);
        ModPoly s = mp_gcd(cur, b, p);
        if (deg(s) > 0 && deg(s) < deg(cur)) {
          stack.push_back(mp_divmod(cur, s, p).first);
          stack.push_back(s);
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  ztrim(c);
  return c;
}

Integer z_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive_integer(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.get_den());
  ZPoly z;
  z.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
  Integer g = z_content(z);
  if (sgn(z.back()) < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c));
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Integer m = a[i] % Integer(static_cast<unsigned long>(p));
    if (sgn(m) < 0) m += static_cast<unsigned long>(p);
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

ZPoly lift_mod(const ModPoly& a) {
  ZPoly z;
  z.reserve(a.size());
  for (u64 c : a) z.emplace_back(static_cast<unsigned long>(c));
  return z;
}

std::vector<u64> small_primes() {
  std::vector<u64> ps;
  const int limit = 4000;
  std::vector<bool> comp(limit + 1, false);
  for (int i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    if (i > 2) ps.push_back(static_cast<u64>(i));
    for (long j = static_cast<long>(i) * i; j <= limit; j += i) comp[j] = true;
  }
  return ps;
}

// Exact division of integer polynomials; nullopt when b does not divide a.
std::optional<ZPoly> z_divides(const ZPoly& a, const ZPoly& b) {
  if (sgn(a[0]) != 0 && sgn(b[0]) != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t()))
    return std::nullopt;
  if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
  auto [q, r] = divmod(to_qpoly(a), to_qpoly(b));
  if (!r.is_zero()) return std::nullopt;
  ZPoly z;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    z.push_back(c.get_num());
  }
  return z;
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Integer lc = f.back();
  std::mt19937_64 rng(0x5eedULL + static_cast<u64>(n));

  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p : small_primes()) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(fp) != n) continue;
    if (deg(mp_gcd(fp, mp_derivative(fp, p), p)) > 0) continue;
    auto facs = mp_factor(mp_monic(fp, p), p, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++tried >= 5) break;
  }
  if (best_p == 0) throw InternalError("factor: no suitable prime for modular factorization");
  if (best.size() == 1) return {f};
  const u64 p = best_p;
  const size_t r = best.size();

  // Coefficient bound for lc * (any factor): |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(lc) * root;
  bound <<= n + 1;

  // Linear multifactor Hensel lifting.
  const u64 lc_inv = mod_inv(reduce(ZPoly{lc}, p)[0], p);
  std::vector<ModPoly> s(r);
  for (size_t i = 0; i < r; ++i) {
    ModPoly others{1};
    for (size_t k = 0; k < r; ++k)
      if (k != i) others = mp_mod(mp_mul(others, best[k], p), best[i], p);
    auto [g, u, v] = mp_xgcd(others, best[i], p);
    (void)g;
    (void)v;
    for (auto& c : u) c = c * lc_inv % p;
    s[i] = u;
  }
  std::vector<ZPoly> G(r);
  for (size_t i = 0; i < r; ++i) G[i] = lift_mod(best[i]);
  Integer m = static_cast<unsigned long>(p);
  while (m <= bound) {
    ZPoly prod{lc};
    for (const auto& g : G) prod = z_mul(prod, g);
    ZPoly e(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      Integer d = f[i] - (i < prod.size() ? prod[i] : Integer(0));
      e[i] = d / m;
    }
    ztrim(e);
    ModPoly ep = reduce(e, p);
    for (size_t i = 0; i < r; ++i) {
      ModPoly delta = mp_mod(mp_mul(ep, s[i], p), best[i], p);
      for (size_t j = 0; j < delta.size(); ++j) G[i][j] += m * static_cast<unsigned long>(delta[j]);
    }
    m *= static_cast<unsigned long>(p);
  }
  const Integer half = m / 2;
  auto symmetric = [&](ZPoly a) {
    for (auto& c : a) {
      c %= m;
      if (sgn(c) < 0) c += m;
      if (c > half) c -= m;
    }
    ztrim(a);
    return a;
  };
  for (auto& g : G) g = symmetric(g);

  // Recombination over subsets of increasing size.
  std::vector<ZPoly> out;
  std::vector<size_t> remaining(r);
  std::iota(remaining.begin(), remaining.end(), 0);
  ZPoly F = f;
  long checks = 0;
  size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (++checks > kRecombinationCap)
        throw BudgetExceeded("factor: recombination exceeds subset cap");
      ZPoly cand{F.back()};
      for (size_t k : idx) cand = symmetric(z_mul(cand, G[remaining[k]]));
      Integer c = z_content(cand);
      if (sgn(cand.back()) < 0) c = -c;
      for (auto& x : cand) x /= c;
      if (auto q = z_divides(F, cand)) {
        out.push_back(cand);
        F = *q;
        std::vector<size_t> keep;
        for (size_t k = 0; k < remaining.size(); ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end()) keep.push_back(remaining[k]);
        remaining = std::move(keep);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[pos] == remaining.size() - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t k = pos + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (!found) ++size;
  }
  if (F.size() > 1) out.push_back(F);
  return out;
}

std::vector<QPoly> factor_squarefree(const QPoly& s) {
  if (s.degree() <= 1) return {s.monic()};
  std::vector<QPoly> out;
  QPoly rest = s;
  if (is_zero(rest.coeff(0))) {
    out.push_back(QPoly({Rational(0), Rational(1)}));
    rest = rest / out.back();
    if (rest.degree() < 1) return out;
  }
  if (rest.degree() == 1) {
    out.push_back(rest.monic());
    return out;
  }
  for (const auto& z : zassenhaus(primitive_integer(rest))) out.push_back(to_qpoly(z).monic());
  return out;
}

}  // namespace

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

QFactorization factor_rational(const QPoly& f, int max_degree) {
  if (f.is_zero()) throw InputError("factor_rational: zero polynomial");
  QFactorization out;
  out.unit = f.lead();
  for (const auto& [s, e] : squarefree_decomposition(f)) {
    if (s.degree() > max_degree)
      throw BudgetExceeded("factor_rational: squarefree part of degree " + std::to_string(s.degree()) +
                           " exceeds budget " + std::to_string(max_degree));
    for (auto& g : factor_squarefree(s)) out.factors.push_back({std::move(g), e});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
    if (a.poly != b.poly) return poly_less(a.poly, b.poly);
    return a.exponent < b.exponent;
  });
  return out;
}

bool is_irreducible_rational(const QPoly& f, int max_degree) {
  if (f.degree() < 1) return false;
  auto fac = factor_rational(f, max_degree);
  return fac.factors.size() == 1 && fac.factors[0].exponent == 1;
}

}  // namespace hypertan
