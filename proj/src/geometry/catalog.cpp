#include "beltrami/geometry/catalog.hpp"

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"

namespace beltrami {

std::string SurfaceSpec::to_string() const {
  std::string s = name;
  for (const auto& [k, v] : params) s += " " + k + "=" + to_text(v);
  if (symbolic) s += " --symbolic";
  return s;
}

SurfaceSpec parse_surface_spec(const std::vector<std::string>& words) {
  if (words.empty()) throw Error(ErrorKind::Usage, "missing surface name");
  SurfaceSpec spec;
  spec.name = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w == "--symbolic") {
      spec.symbolic = true;
      continue;
    }
    auto eq_pos = w.find('=');
    if (eq_pos == std::string::npos || eq_pos == 0)
      throw Error(ErrorKind::Usage, "expected key=value, got '" + w + "'");
    spec.params[w.substr(0, eq_pos)] = Expr(parse_scalar(w.substr(eq_pos + 1)));
  }
  return spec;
}

Expr param_or_symbol(const SurfaceSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it != spec.params.end()) return it->second;
  return Expr::variable(parameter(key));
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterConstraint, what);
}

void check_known(const SurfaceSpec& spec, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : spec.params) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw Error(ErrorKind::Usage, spec.name + " has no parameter '" + k + "'");
  }
}

}  // namespace

SurfaceChart helicoid_chart(const Expr& h) {
  if (h.is_constant()) require(!h.is_zero(), "helicoid needs h != 0");
  Var s = chart_var("s"), t = chart_var("t");
  Expr S = Expr::variable(s), T = Expr::variable(t);
  Vec3 x{ExtElement(T * Expr::variable(cos_of("s"))), ExtElement(T * Expr::variable(sin_of("s"))), ExtElement(h * S)};
  return make_chart("helicoid", x, s, t, nullptr, DerivationEnv({s, t}, s));
}

SurfaceChart quadric1_chart(const Expr& a, const Expr& b, const Expr& c) {
  if (a.is_constant() && b.is_constant()) require(!(a * b).is_zero(), "quadric of the first kind needs a*b != 0");
  if (c.is_constant()) require(sgn(c.constant_value()) > 0, "quadric of the first kind needs c > 0");
  Var u = chart_var("u"), v = chart_var("v");
  Expr U = Expr::variable(u), V = Expr::variable(v);
  RadicandPtr w = make_radicand(c + a * U * U + b * V * V);
  Vec3 x{ExtElement(U), ExtElement(V), ExtElement::root(w)};
  SurfaceChart chart = make_chart("quadric1", x, u, v, w);
  chart.assumptions = {"c + a*u^2 + b*v^2 > 0", "a*b != 0", "c > 0"};
  return chart;
}

SurfaceChart sphere_chart(const Expr& c) {
  SurfaceChart chart = quadric1_chart(Expr(-1), Expr(-1), c);
  chart.name = "sphere";
  return chart;
}

SurfaceChart quadric2_chart(const Expr& a, const Expr& b) {
  if (a.is_constant()) require(sgn(a.constant_value()) > 0, "quadric of the second kind needs a, b > 0 (a <= 0 given)");
  if (b.is_constant()) require(sgn(b.constant_value()) > 0, "quadric of the second kind needs a, b > 0 (b <= 0 given)");
  Var u = chart_var("u"), v = chart_var("v");
  Expr U = Expr::variable(u), V = Expr::variable(v);
  Vec3 x{ExtElement(U), ExtElement(V), ExtElement((a * U * U + b * V * V) / Expr(2))};
  SurfaceChart chart = make_chart("quadric2", x, u, v);
  chart.assumptions = {"a > 0", "b > 0"};
  return chart;
}

SurfaceChart plane_chart() {
  Var u = chart_var("u"), v = chart_var("v");
  return make_chart("plane", {ExtElement(Expr::variable(u)), ExtElement(Expr::variable(v)), ExtElement(0)}, u, v);
}

SurfaceChart translate(const SurfaceChart& chart, const Vec3& offset) {
  SurfaceChart out = chart;
  out.x = add(chart.x, offset);
  out.name = chart.name + "+offset";
  return out;
}

SurfaceChart chart_for(const SurfaceSpec& spec) {
  const std::string& n = spec.name;
  if (n == "helicoid") {
    check_known(spec, {"h"});
    return helicoid_chart(param_or_symbol(spec, "h"));
  }
  if (n == "sphere") {
    check_known(spec, {"c"});
    return sphere_chart(param_or_symbol(spec, "c"));
  }
  if (n == "quadric1") {
    check_known(spec, {"a", "b", "c"});
    return quadric1_chart(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"), param_or_symbol(spec, "c"));
  }
  if (n == "quadric2") {
    check_known(spec, {"a", "b"});
    return quadric2_chart(param_or_symbol(spec, "a"), param_or_symbol(spec, "b"));
  }
  if (n == "plane") {
    check_known(spec, {});
    return plane_chart();
  }
  if (n == "ruled-generic") throw Error(ErrorKind::Usage, "ruled-generic has no concrete chart");
  throw Error(ErrorKind::Usage, "unknown surface '" + n + "'");
}

}  // namespace beltrami
