#pragma once

#include <map>
#include <string>
#include <string_view>

#include "beltrami/algebra/sqrt_ext.hpp"

namespace beltrami {

/// Canonical text: terms in decreasing graded-lex order, denominators as a
/// chain of divisions by atom powers, e.g. `(-t^2 - 2*t*eta - zeta)/A^2`.
/// parse(to_text(e)) reproduces e exactly (same reduced form).
std::string to_text(const MultiPoly& p);
std::string to_text(const Expr& e);
std::string to_text(const ExtElement& x, std::string_view root_name = "W");

std::string to_latex(const MultiPoly& p);
std::string to_latex(const Expr& e);
std::string to_latex(const ExtElement& x, std::string_view root_name = "W");

/// Resolves identifiers to indeterminates while parsing.
class SymbolTable {
 public:
  /// s t u v chart variables; a b c h p q r parameters; zeta eta mu nu xi A
  /// sigma rho and g0..g15 differential symbols; cos(x)/sin(x) for chart x.
  static SymbolTable standard();

  SymbolTable& add(Var v);
  /// Unknown names become Free symbols; a primed unknown name becomes a
  /// differential symbol.
  Var resolve(std::string_view name, int primes) const;

 private:
  std::map<std::string, Var, std::less<>> by_name_;
};

/// Grammar: sums/differences of products/quotients of powers (integer
/// exponents, negative allowed) of numbers, names with trailing primes,
/// cos(x), sin(x), and parenthesized subexpressions. Raises Parse on error.
Expr parse_expr(std::string_view text, const SymbolTable& symbols = SymbolTable::standard());

}  // namespace beltrami
