#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "beltrami/algebra/monomial.hpp"
#include "beltrami/algebra/scalar.hpp"

namespace beltrami {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// strictly decreasing graded-lex order with no zero coefficients, so the
/// leading term is terms().front() and equality is structural.
///
/// Products are reduced modulo cos(x)^2 + sin(x)^2 - 1 for every trig pair
/// present, so every value has degree <= 1 in each cos variable.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Scalar(c)) {}  // NOLINT
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Monomial& m, const Scalar& c = 1);
  /// Combines like terms and sorts; zero coefficients are dropped.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Scalar constant_value() const;  // requires is_constant()
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lead() const { return terms_.front(); }
  Scalar coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly times(const Monomial& m, const Scalar& c = 1) const;
  MultiPoly pow(unsigned n) const;

  /// Plain partial derivative (no chain rule through derivation rules).
  MultiPoly partial(Var v) const;

  /// Max exponent of v; -1 for the zero polynomial.
  int degree_in(Var v) const;
  int total_degree() const;
  std::set<Var, bool (*)(Var, Var)> variables() const;
  bool contains(Var v) const;
  /// Coefficients as a polynomial in v: exponent -> coefficient polynomial.
  std::map<std::uint32_t, MultiPoly> coefficients_in(Var v) const;
  MultiPoly coefficient_of(Var v, std::uint32_t exp) const;

  /// Polynomial substitution v := value.
  MultiPoly substitute(Var v, const MultiPoly& value) const;

  /// Positive rational c such that *this / c has coprime integer coefficients
  /// and positive leading coefficient; returns the signed factor.
  Scalar content() const;
  MultiPoly primitive() const;
  Monomial monomial_content() const;

  /// Quotient if `divisor` divides *this exactly in Q[vars].
  std::optional<MultiPoly> exact_div(const MultiPoly& divisor) const;
  /// Exact division by a monomial; requires every term to be divisible.
  MultiPoly div_monomial(const Monomial& m) const;

  /// Applies cos^2 -> 1 - sin^2 everywhere.
  MultiPoly reduced() const;

  /// Total order on polynomials (used to sort denominator factors).
  int compare(const MultiPoly& other) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace beltrami
