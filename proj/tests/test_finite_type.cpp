#include <gtest/gtest.h>

#include "beltrami/algebra/format.hpp"
#include "beltrami/finite_type/finite_type.hpp"
#include "beltrami/geometry/catalog.hpp"

using namespace beltrami;

namespace {

struct Prepared {
  SurfaceChart chart;
  BeltramiOperator op;
  Iterates it;
};

Prepared prepare(SurfaceChart c, int k_max) {
  BeltramiOperator op = beltrami_operator(third_form(c), c.u1, c.u2, c.env);
  Iterates it = compute_iterates(c.x, op, k_max);
  return {std::move(c), std::move(op), std::move(it)};
}

}  // namespace

TEST(Iterates, SphereAndHelicoid) {
  Prepared s = prepare(sphere_chart(Expr(1)), 2);
  ASSERT_EQ(s.it.size(), 3u);
  EXPECT_TRUE(eq(s.it[1], scale(ExtElement(Expr(2)), s.chart.x)));
  EXPECT_TRUE(eq(s.it[2], scale(ExtElement(Expr(4)), s.chart.x)));
  Prepared h = prepare(helicoid_chart(Expr(1)), 2);
  EXPECT_TRUE(is_zero(h.it[1]));
  EXPECT_TRUE(is_zero(h.it[2]));
}

TEST(Relation, SphereTypeOne) {
  Prepared s = prepare(sphere_chart(Expr(1)), 3);
  auto rel = detect_relation(s.it);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->k, 1);
  ASSERT_EQ(rel->constants.size(), 1u);
  EXPECT_EQ(rel->constants[0], Scalar(-2));
  EXPECT_FALSE(rel->null);
  EXPECT_TRUE(rel->split);
  EXPECT_EQ(rel->to_text(), "D^2 x - 2*D x = 0");
  EXPECT_TRUE(verify_relation(*rel, s.it));
  // a wrong relation does not verify
  TypeRelation wrong = *rel;
  wrong.constants[0] = Scalar(-3);
  EXPECT_FALSE(verify_relation(wrong, s.it));
}

TEST(Relation, RadiusDoesNotChangeTheEigenvalue) {
  Prepared s = prepare(sphere_chart(Expr(9)), 2);
  auto rel = detect_relation(s.it);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->constants[0], Scalar(-2));
}

TEST(Relation, HelicoidNull) {
  Prepared h = prepare(helicoid_chart(Expr(2)), 2);
  auto rel = detect_relation(h.it);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->k, 1);
  EXPECT_TRUE(rel->null);
  auto split = eigen_split(*rel, h.it, h.op);
  ASSERT_TRUE(split.has_value());
  EXPECT_TRUE(split->verified);
}

TEST(Relation, ParaboloidHasNone) {
  Prepared p = prepare(quadric2_chart(Expr(1), Expr(1)), 4);
  EXPECT_FALSE(detect_relation(p.it).has_value());
}

TEST(Relation, TranslationInvariance) {
  Vec3 offset{ExtElement(Expr(3)), ExtElement(Expr(Scalar(-1, 2))), ExtElement(Expr(7))};
  Prepared s = prepare(translate(sphere_chart(Expr(1)), offset), 2);
  auto rel = detect_relation(s.it);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->k, 1);
  EXPECT_EQ(rel->constants[0], Scalar(-2));
  auto split = eigen_split(*rel, s.it, s.op);
  ASSERT_TRUE(split.has_value() && split->x0.has_value());
  EXPECT_TRUE(eq(*split->x0, offset));
  EXPECT_TRUE(split->verified);
  ASSERT_EQ(split->eigenvalues.size(), 1u);
  EXPECT_EQ(split->eigenvalues[0], Scalar(2));
}

TEST(Relation, SyntheticTypeTwo) {
  // Hand-built iterates with D x = e1 + e2, D^k x = e1 + 2^k e2 (eigenvalues 1 and 2).
  Expr u = Expr::variable(chart_var("u")), v = Expr::variable(chart_var("v"));
  Iterates it;
  for (int k = 0; k <= 3; ++k) {
    Expr c2 = Expr(1L << k);
    it.push_back({ExtElement(u + c2 * v), ExtElement(Expr(0)), ExtElement(Expr(0))});
  }
  auto rel = detect_relation(it);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->k, 2);
  EXPECT_EQ(rel->constants[0], Scalar(-3));
  EXPECT_EQ(rel->constants[1], Scalar(2));
  ASSERT_EQ(rel->eigenvalues.size(), 2u);
  EXPECT_EQ(rel->eigenvalues[0].value, Scalar(1));
  EXPECT_EQ(rel->eigenvalues[1].value, Scalar(2));
  EXPECT_FALSE(detect_relation(it, 1).has_value());
}

TEST(Classify, CatalogVerdicts) {
  EXPECT_EQ(classify(sphere_chart(Expr(1)), 2).verdict, Verdict::FiniteType);
  EXPECT_EQ(classify(helicoid_chart(Expr(1)), 2).verdict, Verdict::NullType);
  ClassificationReport p = classify(quadric2_chart(Expr(1), Expr(1)), 3);
  EXPECT_EQ(p.verdict, Verdict::Inconclusive);  // detector alone proves nothing
}

TEST(Certificate, Rules) {
  EXPECT_TRUE(is_growth_certificate({3, 5, 7}, {Expr(1), Expr(-2), Expr(3)}));
  EXPECT_FALSE(is_growth_certificate({3, 5, 5}, {Expr(1), Expr(-2), Expr(3)}));
  EXPECT_FALSE(is_growth_certificate({3, 5, 7}, {Expr(1), Expr(0), Expr(3)}));
  EXPECT_FALSE(is_growth_certificate({}, {}));
}

TEST(Verdict, Names) {
  EXPECT_STREQ(to_string(Verdict::FiniteType), "finite-type");
  EXPECT_STREQ(to_string(Verdict::NullType), "null-type");
  EXPECT_STREQ(to_string(Verdict::InfiniteCertificate), "infinite-type-certificate");
  EXPECT_STREQ(to_string(Verdict::Inconclusive), "inconclusive");
}
