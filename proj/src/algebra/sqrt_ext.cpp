#include "beltrami/algebra/sqrt_ext.hpp"

#include "beltrami/algebra/error.hpp"

namespace beltrami {

namespace {

bool same_radicand(const RadicandPtr& a, const RadicandPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return eq(a->value, b->value);
}

// The radicand shared by x and y, or nullptr when both are rational.
RadicandPtr common(const ExtElement& x, const ExtElement& y) {
  const RadicandPtr& a = x.radicand();
  const RadicandPtr& b = y.radicand();
  if (!a || x.is_rational()) return b;
  if (!b || y.is_rational()) return a;
  if (!same_radicand(a, b)) throw Error(ErrorKind::ExtensionMismatch, "elements belong to different square-root extensions");
  return a;
}

}  // namespace

ExtElement::ExtElement(Expr p, Expr q, RadicandPtr radicand)
    : p_(std::move(p)), q_(std::move(q)), radicand_(std::move(radicand)) {
  if (!radicand_ && !q_.is_zero()) throw Error(ErrorKind::ExtensionMismatch, "root part without a radicand");
}

const Expr& ExtElement::as_rational(const char* context) const {
  if (!q_.is_zero()) throw Error(ErrorKind::ResidualRadical, std::string(context) + ": square-root part does not vanish");
  return p_;
}

ExtElement ExtElement::conjugate() const { return ExtElement(p_, -q_, radicand_); }

Expr ExtElement::norm() const {
  if (q_.is_zero()) return p_ * p_;
  return p_ * p_ - q_ * q_ * radicand_->value;
}

ExtElement ExtElement::operator-() const { return ExtElement(-p_, -q_, radicand_); }

ExtElement operator+(const ExtElement& x, const ExtElement& y) {
  RadicandPtr r = common(x, y);
  return ExtElement(x.p_ + y.p_, x.q_ + y.q_, r);
}

ExtElement operator-(const ExtElement& x, const ExtElement& y) {
  RadicandPtr r = common(x, y);
  return ExtElement(x.p_ - y.p_, x.q_ - y.q_, r);
}

ExtElement operator*(const ExtElement& x, const ExtElement& y) {
  RadicandPtr r = common(x, y);
  if (x.is_rational()) return ExtElement(x.p_ * y.p_, x.p_ * y.q_, r);
  if (y.is_rational()) return ExtElement(x.p_ * y.p_, x.q_ * y.p_, r);
  return ExtElement(x.p_ * y.p_ + x.q_ * y.q_ * r->value, x.p_ * y.q_ + x.q_ * y.p_, r);
}

ExtElement ExtElement::inverse() const {
  Expr n = norm();
  if (n.is_zero()) throw Error(ErrorKind::EvaluationPole, "inverse of an element with zero norm");
  if (q_.is_zero()) return ExtElement(p_.inverse(), Expr(0), radicand_);
  Expr inv = n.inverse();
  return ExtElement(p_ * inv, -q_ * inv, radicand_);
}

ExtElement operator/(const ExtElement& x, const ExtElement& y) {
  if (y.is_rational()) {
    common(x, y);
    return ExtElement(x.p_ / y.p_, x.q_ / y.p_, x.radicand_ ? x.radicand_ : y.radicand_);
  }
  return x * y.inverse();
}

ExtElement ExtElement::substitute(const Bindings& bindings) const {
  Expr p = p_.substitute(bindings);
  if (q_.is_zero()) return ExtElement(p, Expr(0), radicand_);
  RadicandPtr r = make_radicand(radicand_->value.substitute(bindings));
  return ExtElement(p, q_.substitute(bindings), r);
}

bool eq(const ExtElement& x, const ExtElement& y) {
  ExtElement d = x - y;
  return d.is_zero();
}

ExtElement differentiate(const ExtElement& x, Var direction, const DerivationEnv& env) {
  Expr dp = differentiate(x.rational_part(), direction, env);
  if (x.is_rational()) return ExtElement(dp, Expr(0), x.radicand());
  const Expr& g = x.radicand()->value;
  Expr dg = differentiate(g, direction, env);
  Expr dq = differentiate(x.root_part(), direction, env);
  if (!dg.is_zero()) dq += x.root_part() * dg / (Expr(2) * g);
  return ExtElement(dp, dq, x.radicand());
}

}  // namespace beltrami
