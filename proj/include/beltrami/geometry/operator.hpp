#pragma once

#include "beltrami/geometry/forms.hpp"

namespace beltrami {

/// c11 d11 + c12 d12 + c22 d22 + c1 d1 + c2 d2 in the variables (u1, u2).
struct BeltramiOperator {
  Var u1 = nullptr;
  Var u2 = nullptr;
  Expr c11, c12, c22, c1, c2;
  DerivationEnv env;
};

/// Delta f = -(1/sqrt(e)) d_j(sqrt(e) e^ij d_i f). The root is carried as an
/// extension element and the W-part of every coefficient is checked to
/// vanish.
BeltramiOperator beltrami_operator(const FundamentalForm& form, Var u1, Var u2, const DerivationEnv& env);

Expr apply(const BeltramiOperator& op, const Expr& f);
ExtElement apply(const BeltramiOperator& op, const ExtElement& f);
Vec3 apply_vector(const BeltramiOperator& op, const Vec3& x);
Expr iterate(const BeltramiOperator& op, const Expr& f, int k);

/// e^ij d_i f d_j h.
ExtElement first_beltrami(const FundamentalForm& form, const ExtElement& f, const ExtElement& h, Var u1, Var u2,
                          const DerivationEnv& env);

struct IdentityCheck {
  bool holds = false;
  Vec3 lhs;  // Delta x
  Vec3 rhs;  // grad(2H/K, n) - (2H/K) n
};

/// Delta^III x = grad^III(2H/K, n) - (2H/K) n, both sides computed
/// independently.
IdentityCheck position_identity_check(const SurfaceChart& chart);

}  // namespace beltrami
