#pragma once

#include <map>
#include <utility>
#include <vector>

#include "beltrami/algebra/expr.hpp"

namespace beltrami {

/// Derivation rules for d/d(direction), direction being a chart variable.
///
/// Built-in rules by kind: parameters are constant; a chart variable has
/// derivative 1 in its own direction and 0 otherwise; a differential symbol of
/// order k differentiates to order k+1 along the env's arc variable and is
/// constant in every other direction; cos/sin of a chart variable follow the
/// usual rules. Free symbols need an explicit rule or differentiation raises
/// UnboundSymbol.
class DerivationEnv {
 public:
  DerivationEnv() = default;
  DerivationEnv(std::vector<Var> chart_vars, Var arc_var = nullptr)
      : chart_vars_(std::move(chart_vars)), arc_var_(arc_var) {}

  const std::vector<Var>& chart_vars() const { return chart_vars_; }
  Var arc_var() const { return arc_var_; }

  DerivationEnv& set_rule(Var symbol, Var direction, Expr derivative);

  /// d(symbol)/d(direction).
  Expr rule(Var symbol, Var direction) const;

 private:
  std::vector<Var> chart_vars_;
  Var arc_var_ = nullptr;
  std::map<std::pair<Var, Var>, Expr> rules_;
};

Expr differentiate(const MultiPoly& p, Var direction, const DerivationEnv& env);
Expr differentiate(const Expr& e, Var direction, const DerivationEnv& env);

}  // namespace beltrami
