#include "beltrami/quadric/quadric.hpp"

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/algebra/roots.hpp"
#include "beltrami/geometry/catalog.hpp"

namespace beltrami {

namespace {

Expr var(Var v) { return Expr::variable(v); }

Expr d(const Expr& e, Var x, const DerivationEnv& env) { return differentiate(e, x, env); }

// Operator with rational coefficients in the chart's variables.
BeltramiOperator make_op(Var u1, Var u2, const DerivationEnv& env, Expr c11, Expr c12, Expr c22, Expr c1, Expr c2) {
  BeltramiOperator op;
  op.u1 = u1;
  op.u2 = u2;
  op.env = env;
  op.c11 = std::move(c11);
  op.c12 = std::move(c12);
  op.c22 = std::move(c22);
  op.c1 = std::move(c1);
  op.c2 = std::move(c2);
  return op;
}

Scalar odd_product(int n) {
  Scalar p = 1;
  for (int i = 1; i <= n; ++i) p *= 2 * i - 1;
  return p;
}

Scalar factorial(int n) {
  Scalar p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

Expr sign_pow(int k) { return Expr(k % 2 == 0 ? 1 : -1); }

// Top coefficient of a univariate slice and the degree of what remains.
void split_leading(const Expr& slice, Var x, int& degree, Expr& coeff, int& rest_degree) {
  degree = slice.degree_in(x);
  if (degree == kDegreeNegInf) {
    coeff = Expr(0);
    rest_degree = kDegreeNegInf;
    return;
  }
  coeff = coefficient_in(slice, x, degree);
  Expr rest = slice - coeff * var(x).pow(degree);
  rest_degree = rest.degree_in(x);
}

}  // namespace

QuadricKindI make_kind1(const Expr& a, const Expr& b, const Expr& c) {
  QuadricKindI q;
  q.a = a;
  q.b = b;
  q.c = c;
  q.chart = quadric1_chart(a, b, c);
  Expr u = var(q.chart.u1), v = var(q.chart.u2);
  Expr u2 = u * u, v2 = v * v;
  q.omega = c + a * u2 + b * v2;
  q.T = c + a * (a + 1) * u2 + b * (b + 1) * v2;
  q.A = a * a * u2 * v2 + (a * u2 + c).pow(2) + a * a * u2 * q.omega;
  q.B = u * v * (c * (a + b) + a * b * (u2 + v2 + q.omega));
  q.C = b * b * u2 * v2 + (b * v2 + c).pow(2) + b * b * v2 * q.omega;
  return q;
}

QuadricKindI kind1_symbolic() {
  return make_kind1(var(parameter("a")), var(parameter("b")), var(parameter("c")));
}

QuadricKindII make_kind2(const Expr& a, const Expr& b) {
  QuadricKindII q;
  q.a = a;
  q.b = b;
  q.chart = quadric2_chart(a, b);
  Expr u = var(q.chart.u1), v = var(q.chart.u2);
  q.g = 1 + a * a * u * u + b * b * v * v;
  return q;
}

QuadricKindII kind2_symbolic() { return make_kind2(var(parameter("a")), var(parameter("b"))); }

FundamentalForm kind1_third_form_closed(const QuadricKindI& q) {
  Expr den = q.omega.inverse() * q.T.inverse().pow(2);
  return FundamentalForm{FormLabel::III, ExtElement(q.a * q.a * q.C * den), ExtElement(-q.a * q.b * q.B * den),
                         ExtElement(q.b * q.b * q.A * den)};
}

BeltramiOperator kind1_grouped_operator(const QuadricKindI& q) {
  const auto& env = q.chart.env;
  Var u = q.chart.u1, v = q.chart.u2;
  const Expr &a = q.a, &b = q.b, &c = q.c, &A = q.A, &B = q.B, &C = q.C, &T = q.T, &w = q.omega;
  Expr U = var(u), V = var(v);
  Expr k = (a * a * b * b * c * c).inverse();
  Expr kT = T * k;
  Expr c11 = -kT * b * b * A;
  Expr c12 = -kT * 2 * a * b * B;
  Expr c22 = -kT * a * a * C;
  Expr c1 = -kT * b * (b * d(A, u, env) + a * d(B, v, env)) + kT * a * b * b / w * (U * A + V * B) +
            k * a * b * b * ((a + 1) * U * A + (b + 1) * V * B);
  Expr c2 = -kT * a * (a * d(C, v, env) + b * d(B, u, env)) + kT * a * a * b / w * (U * B + V * C) +
            k * a * a * b * ((b + 1) * V * C + (a + 1) * U * B);
  return make_op(u, v, env, c11, c12, c22, c1, c2);
}

std::vector<NamedIdentity> kind1_identities(const QuadricKindI& q) {
  const auto& env = q.chart.env;
  Var u = q.chart.u1, v = q.chart.u2;
  const Expr &a = q.a, &b = q.b, &c = q.c, &A = q.A, &B = q.B, &C = q.C, &T = q.T, &w = q.omega;
  Expr U = var(u), V = var(v), u2 = U * U, v2 = V * V;
  std::vector<NamedIdentity> out;
  out.push_back({"bAu+aBv", b * d(A, u, env) + a * d(B, v, env),
                 a * U * (5 * a * b * (a + 1) * u2 + 5 * a * b * (b + 1) * v2 + c * (3 * a * b + 5 * b + a))});
  out.push_back({"aCv+bBu", a * d(C, v, env) + b * d(B, u, env),
                 b * V * (5 * a * b * (a + 1) * u2 + 5 * a * b * (b + 1) * v2 + c * (3 * a * b + 5 * a + b))});
  out.push_back({"uA+vB", U * A + V * B, (c + a * (a + 1) * u2 + a * (b + 1) * v2) * U * w});
  out.push_back({"uB+vC", U * B + V * C, (c + b * (a + 1) * u2 + b * (b + 1) * v2) * V * w});
  out.push_back({"(a+1)uA+(b+1)vB", (a + 1) * U * A + (b + 1) * V * B,
                 (c * (a + 1) + a * (a + 1) * u2 + a * (b + 1) * v2) * U * T});
  out.push_back({"(b+1)vC+(a+1)uB", (b + 1) * V * C + (a + 1) * U * B,
                 (c * (b + 1) + b * (a + 1) * u2 + b * (b + 1) * v2) * V * T});
  return out;
}

QuadricOperator kind1_operator(const QuadricKindI& q) {
  FundamentalForm third = third_form(q.chart);
  QuadricOperator out{beltrami_operator(third, q.chart.u1, q.chart.u2, q.chart.env), {}};
  const BeltramiOperator& op = out.op;
  Expr U = var(op.u1), V = var(op.u2);
  Expr ka = q.a * (q.a + 1).pow(2) / (q.c * q.c);
  Expr kb = q.b * (q.b + 1).pow(2) / (q.c * q.c);
  out.f = {op.c12, op.c11 + ka * U.pow(6), op.c22 + kb * V.pow(6), op.c1 + 3 * ka * U.pow(5),
           op.c2 + 3 * kb * V.pow(5)};
  return out;
}

FundamentalForm kind2_third_form_closed(const QuadricKindII& q) {
  Expr U = var(q.chart.u1), V = var(q.chart.u2);
  Expr ig2 = q.g.inverse().pow(2);
  return FundamentalForm{FormLabel::III, ExtElement(q.a * q.a * (1 + q.b * q.b * V * V) * ig2),
                         ExtElement(-q.a * q.a * q.b * q.b * U * V * ig2),
                         ExtElement(q.b * q.b * (1 + q.a * q.a * U * U) * ig2)};
}

BeltramiOperator kind2_grouped_operator(const QuadricKindII& q) {
  Expr U = var(q.chart.u1), V = var(q.chart.u2);
  const Expr &a = q.a, &b = q.b, &g = q.g;
  return make_op(q.chart.u1, q.chart.u2, q.chart.env, -g * (1 + a * a * U * U) / (a * a), -2 * U * V * g,
                 -g * (1 + b * b * V * V) / (b * b), -2 * U * g, -2 * V * g);
}

QuadricOperator kind2_operator(const QuadricKindII& q) {
  FundamentalForm third = third_form(q.chart);
  QuadricOperator out{beltrami_operator(third, q.chart.u1, q.chart.u2, q.chart.env), {}};
  const BeltramiOperator& op = out.op;
  Expr U = var(op.u1), V = var(op.u2);
  Expr a2 = q.a * q.a, b2 = q.b * q.b;
  out.f = {-op.c12, -(op.c11 + a2 * U.pow(4)), -(op.c22 + b2 * V.pow(4)), -(op.c1 + 2 * a2 * U.pow(3)),
           -(op.c2 + 2 * b2 * V.pow(3))};
  return out;
}

std::vector<LedgerRow> iterate_ledger(const BeltramiOperator& op, Var x, Var other, int k_max,
                                      const CoefficientLaw& expected, const std::function<int(int)>& degree,
                                      const std::function<int(int)>& bound) {
  std::vector<LedgerRow> rows;
  Expr cur = var(x);
  for (int k = 1; k <= k_max; ++k) {
    cur = apply(op, cur);
    LedgerRow row;
    row.k = k;
    row.iterate = cur;
    row.slice = cur.substitute(other, Expr(0));
    split_leading(row.slice, x, row.leading_degree, row.leading_coefficient, row.remainder_degree);
    row.expected_coefficient = expected(k);
    row.expected_degree = degree(k);
    row.remainder_bound = bound(k);
    Expr P = row.slice - row.expected_coefficient * var(x).pow(row.expected_degree);
    row.holds = P.degree_in(x) <= row.remainder_bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

Expr kind1_leading_law(const Expr& p, const Expr& c, int k) {
  return sign_pow(k) * Expr(odd_product(2 * k)) * p.pow(k) * (p + 1).pow(2 * k) * c.inverse().pow(2 * k);
}

Expr kind2_leading_law(const Expr& p, int k) { return sign_pow(k) * Expr(factorial(2 * k)) * p.pow(2 * k); }

std::vector<LedgerRow> kind1_iterate_u(const QuadricKindI& q, const BeltramiOperator& op, int k_max) {
  return iterate_ledger(
      op, q.chart.u1, q.chart.u2, k_max, [&](int k) { return kind1_leading_law(q.a, q.c, k); },
      [](int k) { return 4 * k + 1; }, [](int k) { return 4 * k; });
}

std::vector<LedgerRow> kind1_iterate_v(const QuadricKindI& q, const BeltramiOperator& op, int k_max) {
  return iterate_ledger(
      op, q.chart.u2, q.chart.u1, k_max, [&](int k) { return kind1_leading_law(q.b, q.c, k); },
      [](int k) { return 4 * k + 1; }, [](int k) { return 4 * k; });
}

std::vector<LedgerRow> kind2_iterate_u(const QuadricKindII& q, const BeltramiOperator& op, int k_max) {
  return iterate_ledger(
      op, q.chart.u1, q.chart.u2, k_max, [&](int k) { return kind2_leading_law(q.a, k); },
      [](int k) { return 2 * k + 1; }, [](int k) { return 2 * k; });
}

std::vector<LedgerRow> kind2_iterate_v(const QuadricKindII& q, const BeltramiOperator& op, int k_max) {
  return iterate_ledger(
      op, q.chart.u2, q.chart.u1, k_max, [&](int k) { return kind2_leading_law(q.b, k); },
      [](int k) { return 2 * k + 1; }, [](int k) { return 2 * k; });
}

MonomialLaw monomial_law(const BeltramiOperator& op, Var x, Var other, int d, int shift, const Expr& expected) {
  MonomialLaw law;
  law.d = d;
  Expr slice = apply(op, var(x).pow(d)).substitute(other, Expr(0));
  law.degree = slice.degree_in(x);
  law.coefficient = law.degree == kDegreeNegInf || law.degree < d + shift ? Expr(0)
                                                                          : coefficient_in(slice, x, d + shift);
  law.expected = expected;
  law.holds = law.degree != kDegreePosInf && law.degree <= d + shift && eq(law.coefficient, expected);
  return law;
}

MonomialLaw kind1_monomial_law(const QuadricKindI& q, const BeltramiOperator& op, int d) {
  Expr expected = -q.a * (q.a + 1).pow(2) * Expr(d * (d + 2)) * q.c.inverse().pow(2);
  return monomial_law(op, q.chart.u1, q.chart.u2, d, 4, expected);
}

MonomialLaw kind2_monomial_law(const QuadricKindII& q, const BeltramiOperator& op, int d) {
  return monomial_law(op, q.chart.u1, q.chart.u2, d, 2, -q.a * q.a * Expr(d * (d + 1)));
}

namespace {

// Rational roots in p of the numerators of the leading coefficients,
// intersected over k (each coefficient must vanish).
std::vector<Scalar> forced_values(const std::vector<LedgerRow>& rows, Var p) {
  std::vector<Scalar> common;
  bool first = true;
  for (const auto& row : rows) {
    std::vector<Scalar> roots;
    for (const auto& r : rational_roots(row.leading_coefficient.numerator(), p)) roots.push_back(r.value);
    if (first) {
      common = roots;
      first = false;
      continue;
    }
    std::vector<Scalar> keep;
    for (const auto& s : common)
      for (const auto& r : roots)
        if (s == r) keep.push_back(s);
    common = keep;
  }
  return common;
}

void fill_certificate(ClassificationReport& report, const std::vector<LedgerRow>& rows, const std::string& coord) {
  std::vector<Expr> coeffs;
  for (const auto& row : rows) {
    report.degree_table.push_back(DegreeRow{row.k, {row.leading_degree}});
    report.leading_degrees.push_back(row.leading_degree);
    report.leading_coefficients.push_back(to_text(row.leading_coefficient));
    coeffs.push_back(row.leading_coefficient);
  }
  bool lemma = true;
  for (const auto& row : rows) lemma = lemma && row.holds;
  report.cross_checks.push_back("closed-form leading term of Delta^k " + coord + ": " + (lemma ? "yes" : "no"));
  if (is_growth_certificate(report.leading_degrees, coeffs)) {
    report.verdict = Verdict::InfiniteCertificate;
    report.summary = "infinite III-type certificate to depth " + std::to_string(report.k_max) + ": " + coord +
                     "-degrees of Delta^k " + coord + " strictly grow";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.summary = "no certificate up to depth " + std::to_string(report.k_max);
  }
}

std::string join_values(const std::vector<Scalar>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + to_text(Expr(v));
  return s.empty() ? "none" : s;
}

}  // namespace

ClassificationReport kind1_classify(const QuadricKindI& q, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::Usage, "k_max must be at least 1");
  ClassificationReport report;
  report.surface = q.chart.name;
  report.k_max = k_max;
  if (q.symbolic()) {
    QuadricOperator op = kind1_operator(q);
    Var pa = parameter("a"), pb = parameter("b");
    auto ru = kind1_iterate_u(q, op.op, k_max);
    auto rv = kind1_iterate_v(q, op.op, k_max);
    std::vector<Scalar> fa, fb;
    for (const auto& s : forced_values(ru, pa))
      if (s != 0) fa.push_back(s);
    for (const auto& s : forced_values(rv, pb))
      if (s != 0) fb.push_back(s);
    report.constraints.push_back("a in {" + join_values(fa) + "} (a != 0 excluded)");
    report.constraints.push_back("b in {" + join_values(fb) + "} (b != 0 excluded)");
    bool lemma = true;
    for (const auto& row : ru) lemma = lemma && row.holds;
    for (const auto& row : rv) lemma = lemma && row.holds;
    report.cross_checks.push_back(std::string("closed-form leading terms: ") + (lemma ? "yes" : "no"));
    for (const auto& row : ru) {
      report.leading_degrees.push_back(row.leading_degree);
      report.leading_coefficients.push_back(to_text(row.leading_coefficient));
    }
    report.verdict = Verdict::Inconclusive;
    bool sphere = fa.size() == 1 && fa[0] == -1 && fb.size() == 1 && fb[0] == -1;
    report.summary = sphere ? "finite III-type forces a = -1 and b = -1 (sphere)"
                            : "finite III-type constraints: a in {" + join_values(fa) + "}, b in {" +
                                  join_values(fb) + "}";
    return report;
  }
  bool sphere = eq(q.a, Expr(-1)) && eq(q.b, Expr(-1));
  if (sphere) {
    ClassificationReport r = classify(q.chart, k_max);
    r.surface = q.chart.name;
    return r;
  }
  QuadricOperator op = kind1_operator(q);
  bool use_u = !eq(q.a, Expr(-1));
  auto rows = use_u ? kind1_iterate_u(q, op.op, k_max) : kind1_iterate_v(q, op.op, k_max);
  report.notes.push_back(std::string("tracked coordinate ") + (use_u ? "u (a != -1)" : "v (b != -1)"));
  fill_certificate(report, rows, use_u ? "u" : "v");
  return report;
}

ClassificationReport kind2_classify(const QuadricKindII& q, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::Usage, "k_max must be at least 1");
  ClassificationReport report;
  report.surface = q.chart.name;
  report.k_max = k_max;
  QuadricOperator op = kind2_operator(q);
  auto ru = kind2_iterate_u(q, op.op, k_max);
  if (q.symbolic()) {
    auto rv = kind2_iterate_v(q, op.op, k_max);
    std::vector<Scalar> fa = forced_values(ru, parameter("a")), fb = forced_values(rv, parameter("b"));
    report.constraints.push_back("a in {" + join_values(fa) + "}");
    report.constraints.push_back("b in {" + join_values(fb) + "}");
    bool contradiction = true;
    for (const auto& s : fa) contradiction = contradiction && s <= 0;
    for (const auto& s : fb) contradiction = contradiction && s <= 0;
    report.notes.push_back(std::string("a, b > 0 contradicts the forced values: ") + (contradiction ? "yes" : "no"));
    fill_certificate(report, ru, "u");
    if (contradiction) report.verdict = Verdict::InfiniteCertificate;
    return report;
  }
  Iterates it = compute_iterates(q.chart.x, op.op, k_max);
  bool none = !detect_relation(it).has_value();
  report.cross_checks.push_back(std::string("no relation up to depth ") + std::to_string(k_max - 1) +
                                " (exact solver): " + (none ? "yes" : "no"));
  fill_certificate(report, ru, "u");
  return report;
}

}  // namespace beltrami
