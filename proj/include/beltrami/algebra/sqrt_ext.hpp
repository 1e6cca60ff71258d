#pragma once

#include <memory>

#include "beltrami/algebra/derivation.hpp"

namespace beltrami {

/// The registered relation W^2 = value. Identity is by pointer; two distinct
/// radicands with equal values are also accepted as the same extension.
struct Radicand {
  Expr value;
};
using RadicandPtr = std::shared_ptr<const Radicand>;

inline RadicandPtr make_radicand(Expr value) {
  return std::make_shared<const Radicand>(Radicand{std::move(value)});
}

/// p + q*W over the rational-function field, W^2 = radicand.
class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(Expr p) : p_(std::move(p)) {}  // NOLINT
  ExtElement(long c) : p_(c) {}              // NOLINT
  ExtElement(Expr p, Expr q, RadicandPtr radicand);
  /// The root W itself.
  static ExtElement root(RadicandPtr radicand) { return ExtElement(Expr(0), Expr(1), std::move(radicand)); }

  const Expr& rational_part() const { return p_; }
  const Expr& root_part() const { return q_; }
  const RadicandPtr& radicand() const { return radicand_; }
  bool is_rational() const { return q_.is_zero(); }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  /// Returns the rational part; raises ResidualRadical if the W-part is nonzero.
  const Expr& as_rational(const char* context) const;

  ExtElement conjugate() const;
  /// p^2 - q^2 * radicand.
  Expr norm() const;

  ExtElement operator-() const;
  friend ExtElement operator+(const ExtElement& x, const ExtElement& y);
  friend ExtElement operator-(const ExtElement& x, const ExtElement& y);
  friend ExtElement operator*(const ExtElement& x, const ExtElement& y);
  friend ExtElement operator/(const ExtElement& x, const ExtElement& y);
  ExtElement& operator+=(const ExtElement& y) { return *this = *this + y; }
  ExtElement& operator-=(const ExtElement& y) { return *this = *this - y; }
  ExtElement& operator*=(const ExtElement& y) { return *this = *this * y; }
  /// Rationalizes by the conjugate; a zero norm raises EvaluationPole.
  ExtElement inverse() const;

  ExtElement substitute(const Bindings& bindings) const;

 private:
  Expr p_;
  Expr q_;
  RadicandPtr radicand_;
};

bool eq(const ExtElement& x, const ExtElement& y);
inline bool operator==(const ExtElement& x, const ExtElement& y) { return eq(x, y); }

/// (p + qW)' = p' + (q' + q g'/(2g)) W  with g the radicand.
ExtElement differentiate(const ExtElement& x, Var direction, const DerivationEnv& env);

inline ExtElement ext_mul(const ExtElement& x, const ExtElement& y) { return x * y; }

}  // namespace beltrami
