#pragma once

#include <climits>
#include <map>
#include <memory>
#include <vector>

#include "beltrami/algebra/poly.hpp"

namespace beltrami {

/// One factor of a denominator: a primitive integer polynomial with positive
/// leading coefficient raised to a positive power. Single-variable atoms carry
/// monomial denominators.
struct DenFactor {
  std::shared_ptr<const MultiPoly> atom;
  int exp;
};

/// Sentinels returned by Expr::degree_in.
inline constexpr int kDegreeNegInf = INT_MIN;  // the zero expression
inline constexpr int kDegreePosInf = INT_MAX;  // variable occurs in the denominator

/// Rational function numerator / prod(atom^exp).
///
/// The denominator is kept factored over "atoms". Sums use the max exponent
/// per atom as a common denominator and every result is reduced by
/// trial-dividing the numerator by its atoms, so fractions over irreducible
/// atoms are fully cancelled without a general polynomial GCD. Equality is
/// decided by cross-multiplication and never depends on how far a value has
/// been reduced.
class Expr {
 public:
  Expr() = default;
  Expr(const MultiPoly& p) : num_(p) {}  // NOLINT
  Expr(const Scalar& c) : num_(c) {}     // NOLINT
  Expr(long c) : num_(c) {}              // NOLINT
  static Expr variable(Var v) { return Expr(MultiPoly::variable(v)); }
  /// num / den for polynomials; den == 0 raises MalformedExpression.
  static Expr fraction(const MultiPoly& num, const MultiPoly& den);
  /// num / prod(atom^exp); atoms must be primitive with positive leading
  /// coefficient. The result is reduced.
  static Expr from_factored(MultiPoly num, std::vector<DenFactor> den);

  const MultiPoly& numerator() const { return num_; }
  const std::vector<DenFactor>& denominator_factors() const { return den_; }
  MultiPoly denominator() const;
  /// 1 / denominator, keeping the factored form.
  Expr reciprocal_denominator() const;
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Scalar constant_value() const { return num_.constant_value(); }
  bool contains(Var v) const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }
  Expr& operator/=(const Expr& b) { return *this = *this / b; }
  Expr inverse() const;
  Expr pow(int n) const;

  /// Structural equality of the reduced representation.
  bool same_form(const Expr& other) const;

  /// Polynomial degree in v; kDegreeNegInf for 0, kDegreePosInf if v occurs in
  /// the denominator.
  int degree_in(Var v) const;

  /// Simultaneous substitution. A denominator that vanishes after
  /// substitution raises EvaluationPole.
  Expr substitute(const std::map<Var, Expr, bool (*)(Var, Var)>& bindings) const;
  Expr substitute(Var v, const Expr& value) const;

 private:
  MultiPoly num_;
  std::vector<DenFactor> den_;  // sorted by atom order, exps > 0

  friend class ExprAccess;
};

/// Equality decided by cross-multiplication: p/q == r/s iff p*s - r*q == 0.
bool eq(const Expr& a, const Expr& b);
inline bool operator==(const Expr& a, const Expr& b) { return eq(a, b); }
inline bool operator!=(const Expr& a, const Expr& b) { return !eq(a, b); }

/// Coefficient of v^k when e is polynomial in v (v absent from the
/// denominator); raises Usage otherwise.
Expr coefficient_in(const Expr& e, Var v, int k);

/// Re-runs cancellation; idempotent and value preserving.
Expr normalize(const Expr& e);

using Bindings = std::map<Var, Expr, bool (*)(Var, Var)>;
inline Bindings make_bindings() { return Bindings(&var_less); }

}  // namespace beltrami
