#include "beltrami/geometry/operator.hpp"

#include "beltrami/algebra/error.hpp"

namespace beltrami {

BeltramiOperator beltrami_operator(const FundamentalForm& form, Var u1, Var u2, const DerivationEnv& env) {
  auto [e11, e12, e22] = form.rational("Beltrami operator");
  Expr det = e11 * e22 - e12 * e12;
  if (det.is_zero())
    throw Error(ErrorKind::DegenerateForm, std::string("form ") + to_string(form.label) + " has zero discriminant");
  Expr inv = det.inverse();
  Expr i11 = e22 * inv, i12 = -e12 * inv, i22 = e11 * inv;

  RadicandPtr rad = make_radicand(det);
  ExtElement root = ExtElement::root(rad);
  ExtElement root_inv = root.inverse();
  auto first_order = [&](const Expr& a, const Expr& b) {
    // -(1/W) [d1 (W a) + d2 (W b)]
    ExtElement s = differentiate(root * ExtElement(a), u1, env) + differentiate(root * ExtElement(b), u2, env);
    return (-(s * root_inv)).as_rational("Beltrami operator first-order coefficient");
  };

  BeltramiOperator op;
  op.u1 = u1;
  op.u2 = u2;
  op.env = env;
  op.c11 = -i11;
  op.c12 = Expr(-2) * i12;
  op.c22 = -i22;
  op.c1 = first_order(i11, i12);
  op.c2 = first_order(i12, i22);
  return op;
}

Expr apply(const BeltramiOperator& op, const Expr& f) {
  Expr f1 = differentiate(f, op.u1, op.env);
  Expr f2 = differentiate(f, op.u2, op.env);
  Expr out = op.c1 * f1 + op.c2 * f2;
  if (!op.c11.is_zero()) out += op.c11 * differentiate(f1, op.u1, op.env);
  if (!op.c12.is_zero()) out += op.c12 * differentiate(f1, op.u2, op.env);
  if (!op.c22.is_zero()) out += op.c22 * differentiate(f2, op.u2, op.env);
  return out;
}

ExtElement apply(const BeltramiOperator& op, const ExtElement& f) {
  if (f.is_rational()) return ExtElement(apply(op, f.rational_part()));
  ExtElement f1 = differentiate(f, op.u1, op.env);
  ExtElement f2 = differentiate(f, op.u2, op.env);
  ExtElement out = ExtElement(op.c1) * f1 + ExtElement(op.c2) * f2;
  out += ExtElement(op.c11) * differentiate(f1, op.u1, op.env);
  out += ExtElement(op.c12) * differentiate(f1, op.u2, op.env);
  out += ExtElement(op.c22) * differentiate(f2, op.u2, op.env);
  return out;
}

Vec3 apply_vector(const BeltramiOperator& op, const Vec3& x) { return {apply(op, x[0]), apply(op, x[1]), apply(op, x[2])}; }

Expr iterate(const BeltramiOperator& op, const Expr& f, int k) {
  if (k < 0) throw Error(ErrorKind::Usage, "negative iteration count");
  Expr out = f;
  for (int i = 0; i < k; ++i) out = apply(op, out);
  return out;
}

ExtElement first_beltrami(const FundamentalForm& form, const ExtElement& f, const ExtElement& h, Var u1, Var u2,
                          const DerivationEnv& env) {
  auto [i11, i12, i22] = inverse(form);
  ExtElement f1 = differentiate(f, u1, env), f2 = differentiate(f, u2, env);
  ExtElement h1 = differentiate(h, u1, env), h2 = differentiate(h, u2, env);
  return ExtElement(i11) * f1 * h1 + ExtElement(i12) * (f1 * h2 + f2 * h1) + ExtElement(i22) * f2 * h2;
}

IdentityCheck position_identity_check(const SurfaceChart& chart) {
  FundamentalForm third = third_form(chart);
  BeltramiOperator op = beltrami_operator(third, chart.u1, chart.u2, chart.env);
  CurvatureData curv = curvature(chart);
  ExtElement phi = curv.H * ExtElement(Expr(2) / curv.K);
  IdentityCheck out;
  out.lhs = apply_vector(op, chart.x);
  for (int i = 0; i < 3; ++i)
    out.rhs[i] = first_beltrami(third, phi, curv.n[i], chart.u1, chart.u2, chart.env) - phi * curv.n[i];
  out.holds = true;
  for (int i = 0; i < 3; ++i) {
    ExtElement d = out.rhs[i];
    // The two sides may sit in different (but compatible) extensions; compare
    // rational parts first so a mismatch reports as false, not as an error.
    if (!out.lhs[i].is_rational() || !d.is_rational()) {
      try {
        out.holds = out.holds && eq(out.lhs[i], d);
      } catch (const Error&) {
        out.holds = false;
      }
    } else {
      out.holds = out.holds && eq(out.lhs[i].rational_part(), d.rational_part());
    }
  }
  return out;
}

}  // namespace beltrami
