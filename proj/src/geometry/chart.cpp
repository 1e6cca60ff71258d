#include "beltrami/geometry/chart.hpp"

#include "beltrami/algebra/error.hpp"

namespace beltrami {

SurfaceChart make_chart(std::string name, Vec3 x, Var u1, Var u2, RadicandPtr radicand,
                        std::optional<DerivationEnv> env) {
  if (u1 == nullptr || u2 == nullptr || u1 == u2 || u1->kind != VarKind::Chart || u2->kind != VarKind::Chart)
    throw Error(ErrorKind::DegenerateChart, name + ": two distinct chart variables are required");
  for (const auto& c : x) {
    if (c.is_rational()) continue;
    if (!radicand || (c.radicand() != radicand && !eq(c.radicand()->value, radicand->value)))
      throw Error(ErrorKind::ExtensionMismatch, name + ": component outside the chart's extension");
  }
  SurfaceChart chart;
  chart.name = std::move(name);
  chart.x = std::move(x);
  chart.u1 = u1;
  chart.u2 = u2;
  chart.radicand = std::move(radicand);
  chart.env = env ? std::move(*env) : DerivationEnv({u1, u2}, u1);
  return chart;
}

Vec3 partial(const Vec3& x, Var direction, const DerivationEnv& env) {
  return {differentiate(x[0], direction, env), differentiate(x[1], direction, env),
          differentiate(x[2], direction, env)};
}

ExtElement dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ExtElement triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Vec3 scale(const ExtElement& k, const Vec3& a) { return {k * a[0], k * a[1], k * a[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_zero(const Vec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }
bool eq(const Vec3& a, const Vec3& b) { return eq(a[0], b[0]) && eq(a[1], b[1]) && eq(a[2], b[2]); }

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  if (p.is_zero()) return MultiPoly();
  const Term& lt = p.lead();
  auto c0 = exact_sqrt(lt.coeff);
  if (!c0) return std::nullopt;
  Monomial m0;
  for (const auto& [v, e] : lt.mono.factors()) {
    if (e % 2 != 0) return std::nullopt;
    m0 = m0 * Monomial::of(v, e / 2);
  }
  const Term head{m0, *c0};
  const std::uint32_t min_degree = p.terms().back().mono.degree();
  MultiPoly root = MultiPoly::monomial(m0, *c0);
  MultiPoly rest = p - root * root;
  Monomial last = m0;
  while (!rest.is_zero()) {
    const Term& t = rest.lead();
    if (!head.mono.divides(t.mono)) return std::nullopt;
    Monomial qm = head.mono.quotient_of(t.mono);
    if (2 * qm.degree() < min_degree || qm.compare(last) >= 0) return std::nullopt;
    MultiPoly q = MultiPoly::monomial(qm, t.coeff / (2 * head.coeff));
    rest -= (root.scaled(2) + q) * q;
    root += q;
    last = qm;
  }
  return root;
}

std::optional<Expr> expr_sqrt(const Expr& e) {
  auto num = poly_sqrt(e.numerator());
  if (!num) return std::nullopt;
  std::vector<DenFactor> den;
  for (const auto& f : e.denominator_factors()) {
    if (f.exp % 2 != 0) return std::nullopt;
    den.push_back(DenFactor{f.atom, f.exp / 2});
  }
  return Expr::from_factored(*num, std::move(den));
}

}  // namespace beltrami
