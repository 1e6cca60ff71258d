#include "beltrami/ruled/ruled.hpp"

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"

namespace beltrami {

namespace {

Var arc() { return chart_var("s"); }
Var ruling() { return chart_var("t"); }
Expr sym(const char* name) { return Expr::variable(differential(name)); }

using Curve = std::array<Expr, 3>;

Curve d(const Curve& c, Var s, const DerivationEnv& env) {
  return {differentiate(c[0], s, env), differentiate(c[1], s, env), differentiate(c[2], s, env)};
}
Expr dot3(const Curve& a, const Curve& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Expr det3(const Curve& a, const Curve& b, const Curve& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

RuledSpec base_spec(std::string name) {
  RuledSpec spec;
  spec.name = std::move(name);
  spec.s = arc();
  spec.t = ruling();
  spec.env = DerivationEnv({spec.s, spec.t}, spec.s);
  return spec;
}

}  // namespace

Expr RuledSpec::n() const {
  Expr T = Expr::variable(t);
  return T * T + Expr(2) * inv.eta * T + inv.zeta;
}

Expr RuledSpec::m() const {
  Expr T = Expr::variable(t);
  return inv.mu * T * T + inv.nu * T + inv.xi;
}

RuledSpec ruled_generic() {
  RuledSpec spec = base_spec("ruled-generic");
  spec.inv = {sym("zeta"), sym("eta"), sym("mu"), sym("nu"), sym("xi"), sym("A")};
  return spec;
}

RuledSpec ruled_generic_mu_zero() {
  RuledSpec spec = ruled_generic();
  spec.name = "ruled-generic mu=0";
  spec.inv.mu = Expr(0);
  return spec;
}

RuledInvariants invariants_from_curves(const Curve& sigma, const Curve& rho, Var s, const DerivationEnv& env) {
  Curve s1 = d(sigma, s, env), s2 = d(s1, s, env);
  Curve r1 = d(rho, s, env), r2 = d(r1, s, env);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidRuledParametrization, what); };
  if (!dot3(s1, rho).is_zero()) fail("<sigma', rho> = 0 does not hold");
  if (dot3(rho, rho) != Expr(1)) fail("<rho, rho> = 1 does not hold");
  if (dot3(r1, r1) != Expr(1)) fail("<rho', rho'> = 1 does not hold");
  RuledInvariants inv;
  inv.zeta = dot3(s1, s1);
  inv.eta = dot3(s1, r1);
  inv.mu = det3(r1, rho, r2);
  inv.nu = det3(s1, rho, r2) + det3(r1, rho, s2);
  inv.xi = det3(s1, rho, s2);
  inv.A = det3(s1, rho, r1);
  if (inv.A.is_zero()) fail("A = (sigma', rho, rho') vanishes, so K = 0");
  return inv;
}

RuledSpec ruled_from_curves(std::string name, Curve sigma, Curve rho) {
  RuledSpec spec = base_spec(std::move(name));
  spec.abstract = false;
  spec.inv = invariants_from_curves(sigma, rho, spec.s, spec.env);
  spec.sigma = std::move(sigma);
  spec.rho = std::move(rho);
  return spec;
}

RuledSpec helicoid_ruled(const Expr& h) {
  Expr S = Expr::variable(arc());
  Curve sigma{Expr(0), Expr(0), h * S};
  Curve rho{Expr::variable(cos_of("s")), Expr::variable(sin_of("s")), Expr(0)};
  return ruled_from_curves("helicoid", sigma, rho);
}

FundamentalForm ruled_first_form(const RuledSpec& spec) {
  return {FormLabel::I, ExtElement(spec.n()), ExtElement(0), ExtElement(1)};
}

FundamentalForm ruled_second_form(const RuledSpec& spec) {
  Expr n = spec.n();
  RadicandPtr w = make_radicand(n);
  Expr inv_n = n.inverse();
  return {FormLabel::II, ExtElement(Expr(0), spec.m() * inv_n, w), ExtElement(Expr(0), spec.inv.A * inv_n, w),
          ExtElement(0)};
}

FundamentalForm ruled_third_form(const RuledSpec& spec) {
  return third_form(ruled_first_form(spec), ruled_second_form(spec));
}

Expr ruled_gauss_curvature(const RuledSpec& spec) {
  return gauss_curvature(ruled_first_form(spec), ruled_second_form(spec));
}

ExtElement ruled_mean_curvature(const RuledSpec& spec) {
  FundamentalForm g = ruled_first_form(spec), h = ruled_second_form(spec);
  ExtElement trace = g.e22 * h.e11 - ExtElement(2) * g.e12 * h.e12 + g.e11 * h.e22;
  return trace * ExtElement(Expr(1) / (Expr(2) * spec.n()));
}

RuledOperator ruled_third_beltrami(const RuledSpec& spec) {
  if (spec.inv.A.is_zero()) throw Error(ErrorKind::InvalidRuledParametrization, "A vanishes identically");
  return {beltrami_operator(ruled_third_form(spec), spec.s, spec.t, spec.env)};
}

std::array<Expr, 5> ruled_pre_expansion(const RuledSpec& spec) {
  const Expr n = spec.n(), m = spec.m(), A = spec.inv.A;
  const DerivationEnv& env = spec.env;
  Expr n_s = differentiate(n, spec.s, env), n_t = differentiate(n, spec.t, env);
  Expr m_s = differentiate(m, spec.s, env), m_t = differentiate(m, spec.t, env);
  Expr dA = differentiate(A, spec.s, env);
  Expr A2 = A * A, A3 = A2 * A, A4 = A3 * A;
  Expr c_ss = -n / A2;
  Expr c_st = Expr(2) * n * m / A3;
  Expr c_tt = -(n * n / A2 + n * m * m / A4);
  Expr c_s = n_s / (Expr(2) * A2) + n * m_t / A3 - m * n_t / (Expr(2) * A3);
  Expr c_t = n * m_s / A3 - m * n_s / (Expr(2) * A3) - m * n * dA / A4 - n * n_t / (Expr(2) * A2) +
             m * m * n_t / (Expr(2) * A4) - Expr(2) * n * m * m_t / A4;
  return {c_ss, c_st, c_s, c_t, c_tt};
}

namespace {

std::vector<std::pair<Expr, Expr>> curve_components(const RuledSpec& spec) {
  std::vector<std::pair<Expr, Expr>> out;
  if (spec.abstract) {
    out.emplace_back(sym("sigma"), sym("rho"));
  } else {
    for (int i = 0; i < 3; ++i) out.emplace_back(spec.sigma[i], spec.rho[i]);
  }
  return out;
}

}  // namespace

std::vector<Expr> q1_vector(const RuledSpec& spec, const RuledOperator& op) {
  std::vector<Expr> out;
  Expr T = Expr::variable(spec.t);
  for (const auto& [sigma, rho] : curve_components(spec)) out.push_back(apply(op.op, sigma + T * rho));
  return out;
}

std::vector<Expr> q1_assembled(const RuledSpec& spec, const RuledOperator& op) {
  std::vector<Expr> out;
  Expr T = Expr::variable(spec.t);
  const DerivationEnv& env = spec.env;
  for (const auto& [sigma, rho] : curve_components(spec)) {
    Expr s1 = differentiate(sigma, spec.s, env), s2 = differentiate(s1, spec.s, env);
    Expr r1 = differentiate(rho, spec.s, env), r2 = differentiate(r1, spec.s, env);
    out.push_back(op.P1() * s2 + op.P2() * r1 + op.P3() * s1 + op.P4() * rho + (op.P1() * r2 + op.P3() * r1) * T);
  }
  return out;
}

RuledOperator specialize(const RuledOperator& abstract_op, const RuledSpec& concrete) {
  const std::pair<const char*, const Expr*> table[] = {
      {"zeta", &concrete.inv.zeta}, {"eta", &concrete.inv.eta}, {"mu", &concrete.inv.mu},
      {"nu", &concrete.inv.nu},     {"xi", &concrete.inv.xi},   {"A", &concrete.inv.A}};
  Bindings b = make_bindings();
  auto bind_all = [&](const MultiPoly& p) {
    for (Var v : p.variables()) {
      if (v->kind != VarKind::Differential || b.count(v)) continue;
      for (const auto& [name, value] : table) {
        if (v->name != name) continue;
        Expr x = *value;
        for (int k = 0; k < v->order; ++k) x = differentiate(x, concrete.s, concrete.env);
        b.emplace(v, x);
      }
    }
  };
  for (const Expr* c : {&abstract_op.op.c11, &abstract_op.op.c12, &abstract_op.op.c22, &abstract_op.op.c1,
                        &abstract_op.op.c2}) {
    bind_all(c->numerator());
    for (const auto& f : c->denominator_factors()) bind_all(*f.atom);
  }
  RuledOperator out;
  out.op.u1 = concrete.s;
  out.op.u2 = concrete.t;
  out.op.env = concrete.env;
  out.op.c11 = abstract_op.op.c11.substitute(b);
  out.op.c12 = abstract_op.op.c12.substitute(b);
  out.op.c22 = abstract_op.op.c22.substitute(b);
  out.op.c1 = abstract_op.op.c1.substitute(b);
  out.op.c2 = abstract_op.op.c2.substitute(b);
  return out;
}

DegreeGrowth degree_growth(const RuledSpec& spec, const RuledOperator& op, int d) {
  if (d < 0) throw Error(ErrorKind::Usage, "degree must be nonnegative");
  Expr T = Expr::variable(spec.t);
  Expr g;
  for (int i = 0; i <= d; ++i) g += Expr::variable(differential("g" + std::to_string(i))) * T.pow(i);
  DegreeGrowth out;
  out.d = d;
  out.image = apply(op.op, g);
  out.degree = out.image.degree_in(spec.t);
  return out;
}

ClassificationReport ruled_classification(const RuledSpec& spec, int k_max) {
  ClassificationReport report;
  report.surface = spec.name;
  report.k_max = k_max;
  RuledOperator op = ruled_third_beltrami(spec);
  std::vector<Expr> q1 = q1_vector(spec, op);
  bool minimal = true;
  for (const auto& c : q1) minimal = minimal && c.is_zero();
  if (minimal) {
    ExtElement H = ruled_mean_curvature(spec);
    report.cross_checks.push_back(std::string("H = 0: ") + (H.is_zero() ? "yes" : "no"));
    TypeRelation rel;
    rel.k = 1;
    rel.constants = {Scalar(0)};
    rel.eigenvalues = {RationalRoot{Scalar(0), 1}};
    rel.null = true;
    rel.split = true;
    report.relation = rel;
    report.verdict = Verdict::NullType;
    report.summary = "finite null III-type 1 (minimal); helicoid";
    return report;
  }
  // Track the component with the largest t-degree at k = 1.
  std::size_t track = 0;
  for (std::size_t i = 1; i < q1.size(); ++i)
    if (q1[i].degree_in(spec.t) > q1[track].degree_in(spec.t)) track = i;
  std::vector<Expr> coeffs;
  Expr cur = q1[track];
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) cur = apply(op.op, cur);
    int deg = cur.degree_in(spec.t);
    report.degree_table.push_back(DegreeRow{k, {deg}});
    report.leading_degrees.push_back(deg);
    Expr lc = deg >= 0 && deg != kDegreePosInf ? coefficient_in(cur, spec.t, deg) : Expr(0);
    report.leading_coefficients.push_back(to_text(lc));
    coeffs.push_back(lc);
  }
  if (is_growth_certificate(report.leading_degrees, coeffs)) {
    report.verdict = Verdict::InfiniteCertificate;
    report.summary = "infinite III-type certificate to depth " + std::to_string(k_max) +
                     ": t-degrees of the iterates strictly grow";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.summary = "no relation certificate up to depth " + std::to_string(k_max);
  }
  return report;
}

}  // namespace beltrami
