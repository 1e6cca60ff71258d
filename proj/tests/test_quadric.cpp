#include <gtest/gtest.h>

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/quadric/quadric.hpp"

using namespace beltrami;

namespace {

Expr P(const char* s) { return parse_expr(s); }

bool same_operator(const BeltramiOperator& x, const BeltramiOperator& y) {
  return eq(x.c11, y.c11) && eq(x.c12, y.c12) && eq(x.c22, y.c22) && eq(x.c1, y.c1) && eq(x.c2, y.c2);
}

}  // namespace

TEST(QuadricI, ClosedThirdFormAndIdentities) {
  QuadricKindI q = kind1_symbolic();
  FundamentalForm engine = third_form(q.chart), closed = kind1_third_form_closed(q);
  EXPECT_TRUE(eq(engine.e11, closed.e11));
  EXPECT_TRUE(eq(engine.e12, closed.e12));
  EXPECT_TRUE(eq(engine.e22, closed.e22));
  auto ids = kind1_identities(q);
  ASSERT_EQ(ids.size(), 6u);
  for (const auto& id : ids) EXPECT_TRUE(id.holds()) << id.name;
  // A C - B^2 = c^2 omega T
  EXPECT_TRUE(eq(q.A * q.C - q.B * q.B, q.c * q.c * q.omega * q.T));
}

TEST(QuadricI, GroupedOperatorMatchesEngine) {
  QuadricKindI q = kind1_symbolic();
  QuadricOperator op = kind1_operator(q);
  EXPECT_TRUE(same_operator(op.op, kind1_grouped_operator(q)));
  // independently derived second-order coefficient
  EXPECT_TRUE(eq(op.op.c11, P("-(c+a*(a+1)*u^2+b*(b+1)*v^2)*(a^3*u^4+a^2*b*u^2*v^2+a^2*c*u^2+a^2*u^4+a^2*u^2*v^2"
                              "+2*a*c*u^2+c^2)/(a^2*c^2)")));
  for (const Expr& f : op.f) {
    EXPECT_TRUE(f.degree_in(q.chart.u1) <= 6 && f.degree_in(q.chart.u2) <= 6);
  }
}

TEST(QuadricI, RationalInstanceAgreesWithSymbolic) {
  QuadricKindI sym = kind1_symbolic();
  QuadricKindI num = make_kind1(Expr(2), Expr(-3), Expr(5));
  Bindings b = make_bindings();
  b.emplace(parameter("a"), Expr(2));
  b.emplace(parameter("b"), Expr(-3));
  b.emplace(parameter("c"), Expr(5));
  QuadricOperator s = kind1_operator(sym), n = kind1_operator(num);
  EXPECT_TRUE(eq(s.op.c11.substitute(b), n.op.c11));
  EXPECT_TRUE(eq(s.op.c1.substitute(b), n.op.c1));
  EXPECT_TRUE(eq(s.f[3].substitute(b), n.f[3]));
}

TEST(QuadricI, LedgersSymbolic) {
  QuadricKindI q = kind1_symbolic();
  QuadricOperator op = kind1_operator(q);
  auto ru = kind1_iterate_u(q, op.op, 2);
  auto rv = kind1_iterate_v(q, op.op, 2);
  for (const auto& r : ru) {
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.leading_degree, 4 * r.k + 1);
    EXPECT_TRUE(eq(r.leading_coefficient, kind1_leading_law(q.a, q.c, r.k)));
    EXPECT_LE(r.remainder_degree, 4 * r.k);
  }
  for (const auto& r : rv) EXPECT_TRUE(r.holds);
  EXPECT_TRUE(eq(ru[0].leading_coefficient, P("-3*a*(a+1)^2/c^2")));
  EXPECT_TRUE(eq(ru[1].leading_coefficient, P("105*a^2*(a+1)^4/c^4")));
}

TEST(QuadricI, LedgerAsymmetry) {
  QuadricKindI q = make_kind1(Expr(1), Expr(2), Expr(1));
  QuadricOperator op = kind1_operator(q);
  auto ru = kind1_iterate_u(q, op.op, 1), rv = kind1_iterate_v(q, op.op, 1);
  EXPECT_TRUE(eq(ru[0].leading_coefficient, Expr(-12)));  // -3 * 1 * 2^2
  EXPECT_TRUE(eq(rv[0].leading_coefficient, Expr(-54)));  // -3 * 2 * 3^2
  EXPECT_EQ(kind1_classify(q, 3).verdict, Verdict::InfiniteCertificate);
}

TEST(QuadricI, MonomialLaw) {
  QuadricKindI q = kind1_symbolic();
  QuadricOperator op = kind1_operator(q);
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(kind1_monomial_law(q, op.op, d).holds) << d;
}

TEST(QuadricI, Classification) {
  ClassificationReport sym = kind1_classify(kind1_symbolic(), 2);
  ASSERT_EQ(sym.constraints.size(), 2u);
  EXPECT_EQ(sym.constraints[0], "a in {-1} (a != 0 excluded)");
  EXPECT_EQ(sym.summary, "finite III-type forces a = -1 and b = -1 (sphere)");

  ClassificationReport sphere = kind1_classify(make_kind1(Expr(-1), Expr(-1), Expr(1)), 3);
  EXPECT_EQ(sphere.verdict, Verdict::FiniteType);
  ASSERT_TRUE(sphere.relation.has_value());
  EXPECT_EQ(sphere.relation->to_text(), "D^2 x - 2*D x = 0");

  // half sphere-like: a = -1 only; the v ledger carries the certificate
  ClassificationReport half = kind1_classify(make_kind1(Expr(-1), Expr(2), Expr(1)), 2);
  EXPECT_EQ(half.verdict, Verdict::InfiniteCertificate);
  EXPECT_EQ(half.notes.front(), "tracked coordinate v (b != -1)");
}

TEST(QuadricII, OperatorAndResiduals) {
  QuadricKindII q = kind2_symbolic();
  QuadricOperator op = kind2_operator(q);
  EXPECT_TRUE(same_operator(op.op, kind2_grouped_operator(q)));
  FundamentalForm engine = third_form(q.chart), closed = kind2_third_form_closed(q);
  EXPECT_TRUE(eq(engine.e11, closed.e11) && eq(engine.e12, closed.e12) && eq(engine.e22, closed.e22));
  EXPECT_TRUE(eq(op.f[3], P("2*u*(1+b^2*v^2)")));
  EXPECT_TRUE(eq(op.op.c11, P("-a^2*u^4-b^2*u^2*v^2-2*u^2-b^2*v^2/a^2-1/a^2")));
}

TEST(QuadricII, LedgersAndLaw) {
  QuadricKindII q = kind2_symbolic();
  QuadricOperator op = kind2_operator(q);
  for (const auto& r : kind2_iterate_u(q, op.op, 4)) {
    EXPECT_TRUE(r.holds) << r.k;
    EXPECT_EQ(r.leading_degree, 2 * r.k + 1);
  }
  for (const auto& r : kind2_iterate_v(q, op.op, 3)) EXPECT_TRUE(r.holds) << r.k;
  EXPECT_TRUE(eq(kind2_leading_law(q.a, 1), P("-2*a^2")));
  for (int d = 1; d <= 12; ++d) EXPECT_TRUE(kind2_monomial_law(q, op.op, d).holds) << d;
}

TEST(QuadricII, ClassificationIsScaleRobust) {
  ClassificationReport base = kind2_classify(make_kind2(Expr(1), Expr(3)), 4);
  ClassificationReport scaled = kind2_classify(make_kind2(Expr(Scalar(5, 2)), Expr(Scalar(15, 2))), 4);
  EXPECT_EQ(base.verdict, Verdict::InfiniteCertificate);
  EXPECT_EQ(scaled.verdict, base.verdict);
  EXPECT_EQ(base.leading_degrees, (std::vector<int>{3, 5, 7, 9}));
  EXPECT_EQ(scaled.leading_degrees, base.leading_degrees);
  ClassificationReport sym = kind2_classify(kind2_symbolic(), 3);
  EXPECT_EQ(sym.constraints, (std::vector<std::string>{"a in {0}", "b in {0}"}));
  EXPECT_EQ(sym.verdict, Verdict::InfiniteCertificate);
}

TEST(QuadricII, BadDepth) { EXPECT_THROW(kind2_classify(make_kind2(Expr(1), Expr(1)), 0), Error); }
