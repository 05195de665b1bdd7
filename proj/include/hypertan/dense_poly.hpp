#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "hypertan/errors.hpp"
#include "hypertan/rational.hpp"

namespace hypertan {

namespace detail {
template <class T>
bool scalar_is_zero(const T& a) {
  return is_zero(a);
}
}  // namespace detail

/// Dense univariate polynomial over a field-like scalar type.
///
/// Coefficients are stored lowest degree first and the vector never carries
/// trailing zeros, so the zero polynomial is the empty vector and has degree -1.
/// `T` must default-construct to zero, construct from `int`, support the field
/// operations and provide a free `is_zero(const T&)` found by ADL.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(const T& a) { return DensePoly(std::vector<T>{a}); }
  static DensePoly monomial(const T& a, int degree) {
    std::vector<T> c(static_cast<size_t>(degree) + 1);
    c.back() = a;
    return DensePoly(std::move(c));
  }
  /// x - root
  static DensePoly linear_root(const T& root) { return DensePoly({-root, T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return DensePoly(std::move(d));
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / lead();
    return scaled(inv);
  }

  DensePoly scaled(const T& a) const {
    std::vector<T> d(c_);
    for (auto& x : d) x = x * a;
    return DensePoly(std::move(d));
  }

  /// p(a*x + b)
  DensePoly compose_linear(const T& a, const T& b) const {
    DensePoly acc;
    DensePoly lin({b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  DensePoly pow(int e) const {
    DensePoly result = constant(T(1));
    DensePoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return DensePoly(std::move(c));
  }
  friend DensePoly operator-(const DensePoly& a) {
    std::vector<T> c(a.c_);
    for (auto& x : c) x = -x;
    return DensePoly(std::move(c));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(c));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  /// Euclidean division; `b` must be nonzero.
  friend std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (a.degree() < b.degree()) return {DensePoly(), a};
    std::vector<T> r(a.c_);
    std::vector<T> q(a.c_.size() - b.c_.size() + 1);
    T inv = T(1) / b.lead();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      if (detail::scalar_is_zero(r[i])) continue;
      T f = r[i] * inv;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {DensePoly(std::move(q)), DensePoly(std::move(r))};
  }
  friend DensePoly operator/(const DensePoly& a, const DensePoly& b) { return divmod(a, b).first; }
  friend DensePoly operator%(const DensePoly& a, const DensePoly& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
DensePoly<T> gcd(DensePoly<T> a, DensePoly<T> b) {
  while (!b.is_zero()) {
    DensePoly<T> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <class T>
std::tuple<DensePoly<T>, DensePoly<T>, DensePoly<T>> xgcd(const DensePoly<T>& a, const DensePoly<T>& b) {
  using P = DensePoly<T>;
  P r0 = a, r1 = b;
  P s0 = P::constant(T(1)), s1;
  P t0, t1 = P::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    P t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Yun's squarefree decomposition in characteristic zero: a = lc * prod f_i^i.
/// Returns the nonconstant monic f_i paired with their exponent i.
template <class T>
std::vector<std::pair<DensePoly<T>, int>> squarefree_decomposition(const DensePoly<T>& a) {
  std::vector<std::pair<DensePoly<T>, int>> out;
  if (a.degree() < 1) return out;
  DensePoly<T> f = a.monic();
  DensePoly<T> fp = f.derivative();
  DensePoly<T> g = gcd(f, fp);
  DensePoly<T> b = f / g;
  DensePoly<T> c = fp / g;
  DensePoly<T> d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    DensePoly<T> h = gcd(b, d);
    if (h.degree() >= 1) out.emplace_back(h.monic(), i);
    b = b / h;
    c = d / h;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

template <class T>
DensePoly<T> squarefree_part(const DensePoly<T>& a) {
  if (a.degree() < 1) return a.is_zero() ? a : DensePoly<T>::constant(T(1));
  return (a / gcd(a, a.derivative())).monic();
}

using QPoly = DensePoly<Rational>;

}  // namespace hypertan
