#include <gtest/gtest.h>

#include "hypertan/canonical.hpp"
#include "hypertan/factor.hpp"
#include "hypertan/number_field.hpp"

using namespace hypertan;

namespace {

QPoly qp(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return QPoly(v);
}

QPoly expand(const QFactorization& f) {
  QPoly acc = QPoly::constant(f.unit);
  for (const auto& x : f.factors) acc = acc * x.poly.pow(x.exponent);
  return acc;
}

}  // namespace

TEST(Rational, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "7", "-3/4", "12/5"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Factor, ProductOfFactorsReproducesInput) {
  // (x^2 - 2)^2 (x + 3)(x^4 + 1) * 5
  QPoly f = (qp({-2, 0, 1}).pow(2) * qp({3, 1}) * qp({1, 0, 0, 0, 1})).scaled(Rational(5));
  QFactorization fac = factor_rational(f);
  EXPECT_EQ(expand(fac), f);
  ASSERT_EQ(fac.factors.size(), 3u);
  for (const auto& x : fac.factors) EXPECT_TRUE(is_irreducible_rational(x.poly));
}

TEST(Factor, SwinnertonDyerStyleIrreducible) {
  // minimal polynomial of sqrt2 + sqrt3: reducible modulo every prime
  EXPECT_TRUE(is_irreducible_rational(qp({1, 0, -10, 0, 1})));
  EXPECT_FALSE(is_irreducible_rational(qp({4, 0, 0, 0, 1})));  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
}

TEST(NumberField, ArithmeticInQSqrt2) {
  FieldPtr k = make_number_field("a", qp({-2, 0, 1}));
  FieldElement a = FieldElement::generator(k);
  EXPECT_EQ(a * a, FieldElement(2));
  FieldElement b = a + FieldElement(1);
  EXPECT_EQ(b * b.inverse(), FieldElement(1));
  EXPECT_EQ(minimal_polynomial(b), qp({-1, -2, 1}));
}

TEST(NumberField, RejectsReducibleMinpoly) {
  EXPECT_THROW(make_number_field("a", qp({-4, 0, 1})), InputError);
  Budget small;
  small.field_degree = 2;
  EXPECT_THROW(make_number_field("a", qp({-2, 0, 0, 1}), small), BudgetExceeded);
}

TEST(NumberField, FactorOverGaussianIntegers) {
  FieldPtr k = make_number_field("i", qp({1, 0, 1}));
  auto f = factor_over(k, to_kpoly(qp({1, 0, 1})));
  ASSERT_EQ(f.size(), 2u);
  for (const auto& x : f) EXPECT_EQ(x.poly.degree(), 1);
}

TEST(NumberField, RootsOverQGroupIntoOrbits) {
  // (x - 1)(x^2 - 3)
  auto r = roots_over(nullptr, to_kpoly(qp({3, -3, -1, 1})));
  ASSERT_EQ(r.size(), 2u);
  int total = 0;
  for (const auto& x : r) total += x.ext.relative_degree;
  EXPECT_EQ(total, 3);
}

TEST(Canonical, OrbitKeyIdentifiesConjugates) {
  FieldPtr k1 = make_number_field("a", qp({-2, 0, 1}));
  FieldPtr k2 = make_number_field("b", qp({-2, 0, 1}));
  FieldElement a = FieldElement::generator(k1), b = FieldElement::generator(k2);
  EXPECT_EQ(orbit_key(std::vector<FieldElement>{a, FieldElement(1)}),
            orbit_key(std::vector<FieldElement>{-b, FieldElement(1)}));
  EXPECT_EQ(orbit_key(std::vector<FieldElement>{a}).size, 2);
  EXPECT_FALSE(orbit_key(std::vector<FieldElement>{a, FieldElement(1)}) ==
               orbit_key(std::vector<FieldElement>{a, FieldElement(2)}));
}
