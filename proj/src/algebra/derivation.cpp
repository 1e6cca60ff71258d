#include "beltrami/algebra/derivation.hpp"

#include <algorithm>
#include <unordered_map>

#include "beltrami/algebra/error.hpp"

namespace beltrami {

DerivationEnv& DerivationEnv::set_rule(Var symbol, Var direction, Expr derivative) {
  rules_[{symbol, direction}] = std::move(derivative);
  return *this;
}

Expr DerivationEnv::rule(Var symbol, Var direction) const {
  auto it = rules_.find({symbol, direction});
  if (it != rules_.end()) return it->second;
  switch (symbol->kind) {
    case VarKind::Parameter:
      return Expr(0);
    case VarKind::Chart:
      return Expr(symbol == direction ? 1 : 0);
    case VarKind::Differential:
      if (arc_var_ == nullptr)
        throw Error(ErrorKind::UnboundSymbol, "differential symbol " + text_name(symbol) + " without an arc variable");
      return direction == arc_var_ ? Expr::variable(prime(symbol)) : Expr(0);
    case VarKind::Cos:
      return direction->name == symbol->name ? -Expr::variable(sin_of(symbol->name)) : Expr(0);
    case VarKind::Sin:
      return direction->name == symbol->name ? Expr::variable(cos_of(symbol->name)) : Expr(0);
    case VarKind::Free:
    case VarKind::ExtRoot:
      break;
  }
  throw Error(ErrorKind::UnboundSymbol, "no derivation rule for " + text_name(symbol) + " along " +
                                            text_name(direction));
}

Expr differentiate(const MultiPoly& p, Var direction, const DerivationEnv& env) {
  std::unordered_map<Var, Expr> rules;
  bool polynomial = true;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mono.factors()) {
      (void)e;
      if (rules.count(v)) continue;
      Expr r = env.rule(v, direction);
      polynomial = polynomial && r.is_polynomial();
      rules.emplace(v, std::move(r));
    }
  if (!polynomial) {
    Expr sum;
    for (const auto& [v, r] : rules)
      if (!r.is_zero()) sum += Expr(p.partial(v)) * r;
    return sum;
  }
  std::vector<Term> out;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mono.factors()) {
      const MultiPoly& r = rules.at(v).numerator();
      if (r.is_zero()) continue;
      Monomial rest = t.mono.lowered(v, 1);
      Scalar c = t.coeff * e;
      for (const auto& rt : r.terms()) out.push_back(Term{rest * rt.mono, c * rt.coeff});
    }
  return Expr(MultiPoly::from_terms(std::move(out)).reduced());
}

// d(N / prod f_i^e_i) = (N' - N * sum e_i f_i'/f_i) / prod f_i^e_i
Expr differentiate(const Expr& e, Var direction, const DerivationEnv& env) {
  Expr dn = differentiate(e.numerator(), direction, env);
  if (e.is_polynomial()) return dn;
  Expr log_derivative;
  for (const auto& f : e.denominator_factors()) {
    Expr df = differentiate(*f.atom, direction, env);
    if (df.is_zero()) continue;
    log_derivative += Expr(f.exp) * df * Expr::from_factored(MultiPoly(1), {DenFactor{f.atom, 1}});
  }
  return (dn - Expr(e.numerator()) * log_derivative) * e.reciprocal_denominator();
}

}  // namespace beltrami
