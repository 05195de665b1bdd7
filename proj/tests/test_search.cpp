#include <gtest/gtest.h>

#include <algorithm>

#include "hypertan/canonical.hpp"
#include "hypertan/search.hpp"
#include "oracles.hpp"

using namespace hypertan;

namespace {

const Poly X = Poly::variable(0, 3), Y = Poly::variable(1, 3), Z = Poly::variable(2, 3);
FieldElement F(int v) { return FieldElement(v); }
ProjectivePoint P(int a, int b, int c) { return ProjectivePoint(F(a), F(b), F(c)); }
PlaneCurve L(int a, int b, int c) { return PlaneCurve(X.scaled(F(a)) + Y.scaled(F(b)) + Z.scaled(F(c))); }

// Join of two rational points by the cross product.
PlaneCurve join(const ProjectivePoint& p, const ProjectivePoint& q) {
  std::array<Rational, 3> a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = p[i].rational();
    b[i] = q[i].rational();
  }
  return PlaneCurve(X.scaled(FieldElement(Rational(a[1] * b[2] - a[2] * b[1]))) +
                    Y.scaled(FieldElement(Rational(a[2] * b[0] - a[0] * b[2]))) +
                    Z.scaled(FieldElement(Rational(a[0] * b[1] - a[1] * b[0]))));
}

std::vector<PlaneCurve> curves_of(const std::vector<HypCertificate>& certs) {
  std::vector<PlaneCurve> out;
  for (const auto& c : certs) out.push_back(c.curve);
  return out;
}

bool same_set(std::vector<PlaneCurve> a, std::vector<PlaneCurve> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

Configuration fig42() { return validate_3c(PlaneCurve(X), PlaneCurve(Z), PlaneCurve(Z * Y - X * X + Y * Y)); }

// 3x^2 - 7xy + 2xz + 2yz - z^2 with the lines x = 0 and y = 0.
Poly quad4_conic() {
  return (X * X).scaled(F(3)) - (X * Y).scaled(F(7)) + (X * Z).scaled(F(2)) + (Y * Z).scaled(F(2)) - Z * Z;
}

}  // namespace

TEST(Validate, Fig42HasFiveNodes) {
  Configuration b = fig42();
  EXPECT_EQ(b.node_count(), 5);
  EXPECT_EQ(b.degree(0), 1);
  EXPECT_EQ(b.degree(2), 2);
}

TEST(Validate, TriangleAndFailures) {
  EXPECT_EQ(validate_3c(PlaneCurve(X), PlaneCurve(Y), PlaneCurve(Z)).node_count(), 3);
  EXPECT_THROW(validate_3c(PlaneCurve(Y), PlaneCurve(X), PlaneCurve(Y * Z - X * X)), InvalidConfiguration);
  EXPECT_THROW(validate_3c(PlaneCurve(X), PlaneCurve(Y), L(1, 1, 0)), InvalidConfiguration);
  EXPECT_THROW(validate_3c(PlaneCurve(X), PlaneCurve(Y), PlaneCurve(Z * Z)), InvalidConfiguration);
}

TEST(Validate, ComponentsAreSortedByDegree) {
  Configuration b = validate_3c(PlaneCurve(Y * Z - X * X + Y * Y), PlaneCurve(X), PlaneCurve(Z));
  EXPECT_EQ(b.degree(0), 1);
  EXPECT_EQ(b.degree(2), 2);
  EXPECT_EQ(b.names[2], "B1");
}

TEST(HypLines, Quad4MatchesElementaryGeometry) {
  Configuration b = validate_3c(PlaneCurve(X), PlaneCurve(Y), PlaneCurve(quad4_conic()));
  // nodes: B1 n B3 = (0:1:0), (0:1:2); B2 n B3 = (-1:0:1), (1:0:3); B1 n B2 = (0:0:1)
  const std::vector<ProjectivePoint> on1 = {P(0, 1, 0), P(0, 1, 2)}, on2 = {P(-1, 0, 1), P(1, 0, 3)};
  std::vector<PlaneCurve> expected, two_nodes, tangent_at;
  for (const auto& p : on1)
    for (const auto& q : on2) two_nodes.push_back(join(p, q));
  // tangent of the conic at a point v is (M v) . X for the symmetric matrix M
  const int m[3][3] = {{6, -7, 2}, {-7, 0, 2}, {2, 2, -2}};
  for (const auto* set : {&on1, &on2})
    for (const auto& v : *set) {
      Rational gr[3];
      for (int i = 0; i < 3; ++i) {
        gr[i] = 0;
        for (int j = 0; j < 3; ++j) gr[i] += m[i][j] * v[j].rational();
      }
      tangent_at.push_back(PlaneCurve(X.scaled(FieldElement(gr[0])) + Y.scaled(FieldElement(gr[1])) +
                                      Z.scaled(FieldElement(gr[2]))));
    }
  // lines y = s x through (0:0:1) tangent to the conic: discriminant 4(s-1)(s-4)
  std::vector<PlaneCurve> through = {L(1, -1, 0), L(4, -1, 0)};
  for (auto* v : {&two_nodes, &tangent_at, &through}) expected.insert(expected.end(), v->begin(), v->end());

  Hyp1Result r = hyp1_lines(b);
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.count(), 10);
  EXPECT_TRUE(same_set(curves_of(r.lines), expected));
  std::map<std::string, std::vector<PlaneCurve>> by_class;
  for (const auto& c : r.lines) by_class[c.line_class].push_back(c.curve);
  EXPECT_TRUE(same_set(by_class["through_two_nodes"], two_nodes));
  EXPECT_TRUE(same_set(by_class["tangent_through_node"], through));
  EXPECT_TRUE(same_set(by_class["tangent_at_node"], tangent_at));
}

TEST(HypLines, FourLinesGiveTheDiagonals) {
  Configuration b = validate_configuration({PlaneCurve(X), PlaneCurve(Y), PlaneCurve(Z), L(1, 1, 1)});
  // complete quadrilateral: vertices pair up into three diagonals
  const ProjectivePoint xy = P(0, 0, 1), zw = P(1, -1, 0), xz = P(0, 1, 0), yw = P(1, 0, -1), xw = P(0, 1, -1),
                        yz = P(1, 0, 0);
  Hyp1Result r = hyp1_lines(b);
  EXPECT_EQ(r.count(), 3);
  EXPECT_TRUE(same_set(curves_of(r.lines), {join(xy, zw), join(xz, yw), join(xw, yz)}));
}

TEST(HypLines, FiveLinesGiveNothing) {
  Configuration b =
      validate_configuration({PlaneCurve(X), PlaneCurve(Y), PlaneCurve(Z), L(1, 1, 1), L(1, 2, 3)});
  EXPECT_EQ(hyp1_lines(b).count(), 0);
  MultiResult m = multi_component_check(b, 1);
  ASSERT_TRUE(m.emptiness);
  EXPECT_EQ(m.emptiness->reason, EmptinessReason::COMPONENTS_GE_5);
}

TEST(Multi, HigherDegreeOnFourComponentsIsEmpty) {
  Configuration b = validate_configuration({PlaneCurve(X), PlaneCurve(Y), PlaneCurve(Z), L(1, 1, 1)});
  for (int d : {2, 3}) {
    MultiResult m = multi_component_check(b, d);
    ASSERT_TRUE(m.emptiness);
    EXPECT_EQ(m.emptiness->reason, EmptinessReason::MULTI_COMP_HIGH_D);
  }
  EXPECT_EQ(multi_component_check(b, 1).lines.count(), 3);
}

TEST(Structural, ReasonCodes) {
  Configuration c222 = validate_3c(PlaneCurve(X * X + Y * Y - Z * Z),
                                   PlaneCurve(X * X - (Y * Y).scaled(F(2)) + (Z * Z).scaled(F(3)) + X * Y),
                                   PlaneCurve((X * X).scaled(F(2)) + Y * Y - (Z * Z).scaled(F(5)) + Y * Z));
  EXPECT_EQ(structural_emptiness(c222, 3)->reason, EmptinessReason::B1_DEGREE);
  Configuration c123 = validate_3c(L(1, -1, 2), PlaneCurve(X * X + Y * Y - (Z * Z).scaled(F(4)) + X * Y),
                                   PlaneCurve(Y * Y * Z - X.pow(3) + X * Z * Z - Z.pow(3).scaled(F(3))));
  EXPECT_EQ(structural_emptiness(c123, 5)->reason, EmptinessReason::B2_CONIC_HIGH_D);
  EXPECT_FALSE(structural_emptiness(c123, 2).has_value());
  Configuration c114 = validate_3c(PlaneCurve(X), L(0, 1, 1),
                                   PlaneCurve(X.pow(4) + Y.pow(4) - Z.pow(4) + (X * Y * Z * Z).scaled(F(3)) +
                                              (Y.pow(3) * Z).scaled(F(2))));
  EXPECT_FALSE(structural_emptiness(c114, 4).has_value());
}

TEST(Search, Fig42FindsTheFourConics) {
  SearchResult r = hyp_ge2_search(fig42());
  const std::vector<PlaneCurve> expected = {
      PlaneCurve(Z * Y - X * X), PlaneCurve(Z * Y + Z * Z + X * X),
      PlaneCurve((X * Z).scaled(F(4)) + (X * Y).scaled(F(8)) - (X * X).scaled(F(8)) - Z * Z),
      PlaneCurve((X * Z).scaled(F(4)) + (X * Y).scaled(F(8)) + (X * X).scaled(F(8)) + Z * Z)};
  EXPECT_TRUE(same_set(curves_of(r.certificates), expected));
  EXPECT_EQ(r.count(), 4);
  EXPECT_EQ(r.bound, 4);
  const PlaneCurve base = fig42().curve();
  for (const auto& c : r.certificates) {
    EXPECT_EQ(c.genus, 0);
    EXPECT_EQ(c.mult_p + c.mult_q, c.degree);
    EXPECT_TRUE(reverify(base, c.curve));
  }
}

TEST(Search, FrameChoiceDoesNotMatter) {
  const auto a = curves_of(hyp_ge2_search(fig42(), {0}).certificates);
  for (std::uint64_t seed : {1u, 42u, 977u}) EXPECT_TRUE(same_set(a, curves_of(hyp_ge2_search(fig42(), {seed}).certificates)));
}

TEST(Search, CubicWithFlexFindsCuspidalCubic) {
  // B3 - C = y^3, so C = y z^2 - x^3 meets B3 only at the flex (0:0:1)
  Configuration b = validate_3c(PlaneCurve(X), PlaneCurve(Z), PlaneCurve(Y * Z * Z - X.pow(3) + Y.pow(3)));
  SearchResult r = hyp_ge2_search(b);
  const PlaneCurve expected(Y * Z * Z - X.pow(3));
  auto it = std::find_if(r.certificates.begin(), r.certificates.end(),
                         [&](const HypCertificate& c) { return c.curve == expected; });
  ASSERT_NE(it, r.certificates.end());
  EXPECT_EQ(it->degree, 3);
  EXPECT_EQ(*it->type_p, (PointType{2, 3}));
  EXPECT_EQ(*it->type_q, (PointType{1, 3}));
  EXPECT_LE(r.count(), 6);
}

TEST(Search, GenericCubicIsExhausted) {
  Configuration b = validate_3c(L(1, 2, -1), L(0, 3, 1), PlaneCurve(Y * Y * Z - X.pow(3) - X * Z * Z + Z.pow(3).scaled(F(2))));
  SearchResult r = hyp_ge2_search(b);
  ASSERT_TRUE(r.emptiness);
  EXPECT_EQ(r.emptiness->reason, EmptinessReason::SEARCH_EXHAUSTED);
  EXPECT_FALSE(r.emptiness->refuted.empty());
}

TEST(Triangle, PencilsHaveDimensionOneAndVerify) {
  Configuration b = validate_3c(PlaneCurve(X), PlaneCurve(Y), PlaneCurve(Z));
  for (int d = 1; d <= 4; ++d) {
    TrianglePencilResult r = triangle_pencil(b, d);
    ASSERT_EQ(r.families.size(), 6u);
    for (const auto& f : r.families) {
      EXPECT_GE(f.projective_dimension, 1);
      EXPECT_EQ(f.samples.size(), 3u);
      for (const auto& s : f.samples) {
        EXPECT_TRUE(s.report.hyper_bitangent);
        EXPECT_TRUE(reverify(b.curve(), s.curve));
      }
    }
  }
  EXPECT_THROW(triangle_pencil(validate_3c(PlaneCurve(X), PlaneCurve(Z), PlaneCurve(Z * Y - X * X + Y * Y)), 2),
               InputError);
}

TEST(Triangle, ConcurrentLinesRejected) {
  EXPECT_THROW(triangle_pencil(Configuration{{PlaneCurve(X), PlaneCurve(Y), L(1, 1, 0)}, {"a", "b", "c"}, {}}, 2),
               PreconditionError);
}

TEST(Qb, FamiliesVerify) {
  for (int b : {4, 5}) {
    QbReport r = verify_qb_families(b, b + 1, {Rational(2), Rational(-1)});
    EXPECT_TRUE(r.pass);
    for (const auto& e : r.entries) {
      EXPECT_EQ(e.r_genus, 0);
      EXPECT_EQ(*e.r_type_qinf, (PointType{b - 1, b}));
    }
  }
  EXPECT_THROW(verify_qb_families(4, 4, {Rational(0)}), InputError);
  EXPECT_THROW(verify_qb_families(4, 4, {Rational(1)}), InputError);
  EXPECT_THROW(verify_qb_families(3, 4, {Rational(2)}), InputError);
}

TEST(Qb, RationalParametrizationAndIntersectionOracle) {
  const int b = 4;
  const Rational t(3);
  const PlaneCurve r(Z.pow(b - 1) * Y - X.pow(b).scaled(FieldElement(t)));
  // (u v^(b-1) : t u^b : v^b) lies on R_t, so R_t is rational
  const Poly u = Poly::variable(0, 3), v = Poly::variable(1, 3);
  EXPECT_TRUE(r.form().compose({u * v.pow(b - 1), u.pow(b).scaled(FieldElement(t)), v.pow(b)}).is_zero());
  // I(R_t, Q_b) at q0 in the chart z = 1 and at q_inf in the chart y = 1
  const PlaneCurve q = q_curve(b);
  EXPECT_EQ(oracle::resultant_multiplicity(oracle::affine_of(r.form()), oracle::affine_of(q.form())), b);
  const std::vector<Poly> swap = {X, Z, Y};
  EXPECT_EQ(oracle::resultant_multiplicity(oracle::affine_of(r.form().compose(swap)),
                                           oracle::affine_of(q.form().compose(swap))),
            b * (b - 1));
}

TEST(Reverify, RejectsSecant) {
  EXPECT_FALSE(reverify(fig42().curve(), L(1, 1, 3)));
  EXPECT_TRUE(reverify(fig42().curve(), PlaneCurve(Z * Y - X * X)));
}
