#include "properties.hpp"

#include <functional>

#include "beltrami/algebra/derivation.hpp"
#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/geometry/catalog.hpp"
#include "beltrami/geometry/operator.hpp"

namespace beltrami::testing {

namespace {

Var U() { return chart_var("u"); }
Var V() { return chart_var("v"); }
Var Pa() { return parameter("a"); }

// Runs `check` n times; a thrown Error counts as a failure.
PropertyResult run(const std::string& name, int n, const std::function<std::string(int)>& check) {
  PropertyResult r{name, n, 0, {}};
  for (int i = 0; i < n; ++i) {
    std::string why;
    try {
      why = check(i);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      if (r.failures == 0) r.first_failure = "case " + std::to_string(i) + ": " + why;
      ++r.failures;
    }
  }
  return r;
}

}  // namespace

Scalar ExprGen::rational(int range) {
  Scalar q(integer(-range, range), integer(1, 3));
  q.canonicalize();
  return q;
}

Scalar ExprGen::positive(int range) {
  Scalar q(integer(1, range), integer(1, 3));
  q.canonicalize();
  return q;
}

MultiPoly ExprGen::poly(int max_terms, int max_exp, bool with_param) {
  MultiPoly p;
  int terms = integer(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    int eu = integer(0, max_exp), ev = integer(0, max_exp), ea = with_param ? integer(0, 1) : 0;
    Monomial mono = Monomial::of(U(), static_cast<std::uint32_t>(eu)) * Monomial::of(V(), static_cast<std::uint32_t>(ev)) *
                    Monomial::of(Pa(), static_cast<std::uint32_t>(ea));
    p += MultiPoly::monomial(mono, rational());
  }
  return p;
}

Expr ExprGen::expr() {
  Expr num(poly());
  Expr u = Expr::variable(U()), v = Expr::variable(V()), a = Expr::variable(Pa());
  switch (integer(0, 5)) {
    case 0: return num;
    case 1: return num / (1 + u * u);
    case 2: return num / (u * v);
    case 3: return num / (v + 2).pow(2);
    case 4: return num / (a * (1 + u * u + v * v));
    default: return num / ((u + 1) * (2 + a * a));
  }
}

PropertyResult ring_axioms(std::uint64_t seed, int n) {
  ExprGen g(seed);
  return run("ring axioms", n, [&](int) -> std::string {
    Expr x = g.expr(), y = g.expr(), z = g.expr();
    if (!eq(x + y, y + x)) return "addition not commutative";
    if (!eq(x * y, y * x)) return "multiplication not commutative";
    if (!eq((x + y) + z, x + (y + z))) return "addition not associative";
    if (!eq((x * y) * z, x * (y * z))) return "multiplication not associative";
    if (!eq(x * (y + z), x * y + x * z)) return "not distributive";
    if (!(x - x).is_zero()) return "x - x != 0";
    if (!x.is_zero() && !eq(x * x.inverse(), Expr(1))) return "x * 1/x != 1";
    if (!eq(x + Expr(0), x) || !eq(x * Expr(1), x)) return "identity elements";
    return {};
  });
}

PropertyResult normalize_idempotent(std::uint64_t seed, int n) {
  ExprGen g(seed);
  return run("normalize idempotent", n, [&](int) -> std::string {
    Expr x = g.expr() * g.expr() + g.expr();
    Expr once = normalize(x), twice = normalize(once);
    if (!twice.same_form(once)) return "normalize(normalize(x)) differs structurally";
    if (!eq(once, x)) return "normalize changed the value";
    return {};
  });
}

PropertyResult print_parse_roundtrip(std::uint64_t seed, int n) {
  ExprGen g(seed);
  return run("print/parse round trip", n, [&](int) -> std::string {
    Expr x = g.expr() + g.expr();
    Expr back = parse_expr(to_text(x));
    if (!back.same_form(x)) return "parse(to_text(x)) != x for " + to_text(x);
    return {};
  });
}

PropertyResult schwarz_symmetry(std::uint64_t seed, int n) {
  ExprGen g(seed);
  DerivationEnv env({U(), V()}, U());
  return run("Schwarz symmetry", n, [&](int) -> std::string {
    Expr x = g.expr();
    if (!eq(differentiate(differentiate(x, U(), env), V(), env), differentiate(differentiate(x, V(), env), U(), env)))
      return "d_uv != d_vu for " + to_text(x);
    RadicandPtr w = make_radicand(Expr(1) + Expr::variable(U()).pow(2) + Expr::variable(V()).pow(2));
    ExtElement e(g.expr(), Expr(g.poly()), w);
    ExtElement uv = differentiate(differentiate(e, U(), env), V(), env);
    ExtElement vu = differentiate(differentiate(e, V(), env), U(), env);
    if (!eq(uv, vu)) return "extension d_uv != d_vu";
    return {};
  });
}

PropertyResult degree_law(std::uint64_t seed, int n) {
  ExprGen g(seed);
  return run("degree law", n, [&](int) -> std::string {
    MultiPoly p = g.poly(), q = g.poly();
    if (p.is_zero() || q.is_zero()) return {};
    for (Var v : {U(), V()}) {
      if ((p * q).degree_in(v) != p.degree_in(v) + q.degree_in(v)) return "deg(pq) != deg p + deg q";
      if ((p + q).degree_in(v) > std::max(p.degree_in(v), q.degree_in(v))) return "deg(p+q) too large";
    }
    if ((p * q).total_degree() != p.total_degree() + q.total_degree()) return "total degree not additive";
    return {};
  });
}

PropertyResult conjugate_product(std::uint64_t seed, int n) {
  ExprGen g(seed);
  return run("conjugate product is radical-free", n, [&](int) -> std::string {
    Expr radicand = Expr(g.poly(3, 2, false)) * Expr(g.poly(3, 2, false)) + 1;
    RadicandPtr w = make_radicand(radicand);
    Expr p = g.expr(), q = g.expr();
    ExtElement x(p, q, w);
    ExtElement prod = x * x.conjugate();
    if (!prod.is_rational()) return "x * conj(x) has a W part";
    if (!eq(prod.rational_part(), p * p - q * q * radicand)) return "x * conj(x) != p^2 - q^2 g";
    if (!eq(prod.rational_part(), x.norm())) return "norm disagrees";
    return {};
  });
}

namespace {

struct CatalogOp {
  SurfaceChart chart;
  BeltramiOperator op;
};

std::vector<CatalogOp> catalog_ops() {
  std::vector<SurfaceChart> charts = {
      helicoid_chart(Expr(1)),         helicoid_chart(Expr(Scalar(3, 2))), sphere_chart(Expr(1)),
      sphere_chart(Expr(4)),           quadric1_chart(Expr(2), Expr(3), Expr(5)),
      quadric1_chart(Expr(-1), Expr(2), Expr(1)), quadric2_chart(Expr(1), Expr(1)),
      quadric2_chart(Expr(2), Expr(Scalar(1, 3))),
  };
  std::vector<CatalogOp> out;
  for (auto& c : charts) {
    BeltramiOperator op = beltrami_operator(third_form(c), c.u1, c.u2, c.env);
    out.push_back({std::move(c), std::move(op)});
  }
  return out;
}

// Random polynomial in the chart's own variables.
Expr chart_poly(ExprGen& g, const SurfaceChart& c) {
  Expr x = Expr::variable(c.u1), y = Expr::variable(c.u2), out(0);
  int terms = g.integer(1, 3);
  for (int i = 0; i < terms; ++i) out += Expr(g.rational()) * x.pow(g.integer(0, 2)) * y.pow(g.integer(0, 2));
  return out;
}

}  // namespace

PropertyResult operator_linearity(std::uint64_t seed, int n) {
  ExprGen g(seed);
  auto ops = catalog_ops();
  return run("operator linearity", n, [&](int i) -> std::string {
    const CatalogOp& c = ops[static_cast<std::size_t>(i) % ops.size()];
    Expr f = chart_poly(g, c.chart), h = chart_poly(g, c.chart), lambda(g.rational());
    if (!eq(apply(c.op, lambda * f + h), lambda * apply(c.op, f) + apply(c.op, h)))
      return "Delta(lf + h) != l Delta f + Delta h on " + c.chart.name;
    return {};
  });
}

PropertyResult constant_annihilation(std::uint64_t seed, int n) {
  ExprGen g(seed);
  auto ops = catalog_ops();
  return run("constants are annihilated", n, [&](int i) -> std::string {
    const CatalogOp& c = ops[static_cast<std::size_t>(i) % ops.size()];
    Expr k = Expr(g.rational()) + Expr(g.rational()) * Expr::variable(Pa());
    if (!apply(c.op, k).is_zero()) return "Delta(const) != 0 on " + c.chart.name;
    Vec3 shifted = translate(c.chart, {ExtElement(k), ExtElement(Expr(g.rational())), ExtElement(Expr(1))}).x;
    Vec3 d1 = apply_vector(c.op, shifted), d0 = apply_vector(c.op, c.chart.x);
    if (!eq(d1, d0)) return "Delta does not ignore a translation on " + c.chart.name;
    return {};
  });
}

PropertyResult catalog_w_free(std::uint64_t seed, int n) {
  ExprGen g(seed);
  return run("catalog operators are radical-free", n, [&](int i) -> std::string {
    SurfaceChart c;
    switch (i % 4) {
      case 0: c = helicoid_chart(Expr(g.positive())); break;
      case 1: c = sphere_chart(Expr(g.positive())); break;
      case 2: {
        Scalar a = g.rational(), b = g.rational();
        if (a == 0) a = 1;
        if (b == 0) b = -1;
        c = quadric1_chart(Expr(a), Expr(b), Expr(g.positive()));
        break;
      }
      default: c = quadric2_chart(Expr(g.positive()), Expr(g.positive()));
    }
    // beltrami_operator raises ResidualRadical if any coefficient keeps a W part.
    FundamentalForm III = third_form(c);
    BeltramiOperator op = beltrami_operator(III, c.u1, c.u2, c.env);
    for (const ExtElement* e : {&III.e11, &III.e12, &III.e22})
      if (!e->is_rational()) return "III has a W part on " + c.name;
    Vec3 dx = apply_vector(op, c.x);
    if (!dx[0].is_rational() || !dx[1].is_rational()) return "Delta of a rational coordinate has a W part";
    return {};
  });
}

std::vector<PropertyResult> all_properties(std::uint64_t seed, int n) {
  return {ring_axioms(seed, n),          normalize_idempotent(seed + 1, n), print_parse_roundtrip(seed + 2, n),
          schwarz_symmetry(seed + 3, n), degree_law(seed + 4, n),           conjugate_product(seed + 5, n),
          operator_linearity(seed + 6, n), constant_annihilation(seed + 7, n), catalog_w_free(seed + 8, n)};
}

}  // namespace beltrami::testing
