#pragma once

#include <array>
#include <string>
#include <vector>

#include "beltrami/finite_type/finite_type.hpp"
#include "beltrami/geometry/operator.hpp"

namespace beltrami {

struct RuledInvariants {
  Expr zeta, eta, mu, nu, xi, A;
};

/// x(s, t) = sigma(s) + t rho(s). Abstract specs carry the invariants as
/// differential symbols; concrete specs carry the curves and derive them.
struct RuledSpec {
  std::string name;
  bool abstract = true;
  std::array<Expr, 3> sigma, rho;  // concrete only
  RuledInvariants inv;
  Var s = nullptr;
  Var t = nullptr;
  DerivationEnv env;

  Expr n() const;  // t^2 + 2 eta t + zeta
  Expr m() const;  // mu t^2 + nu t + xi
};

/// Generic ruled surface with zeta, eta, mu, nu, xi, A as independent symbols.
RuledSpec ruled_generic();
/// Generic spec with mu (and hence all its derivatives) set to zero.
RuledSpec ruled_generic_mu_zero();

/// Checks <sigma', rho> = 0, <rho, rho> = 1, <rho', rho'> = 1 and computes
/// the invariants; A == 0 is rejected too.
RuledInvariants invariants_from_curves(const std::array<Expr, 3>& sigma, const std::array<Expr, 3>& rho,
                                       Var s, const DerivationEnv& env);
RuledSpec ruled_from_curves(std::string name, std::array<Expr, 3> sigma, std::array<Expr, 3> rho);
/// sigma = (0, 0, h s), rho = (cos s, sin s, 0).
RuledSpec helicoid_ruled(const Expr& h);

FundamentalForm ruled_first_form(const RuledSpec& spec);
/// h11 = m/sqrt(n), h12 = A/sqrt(n), h22 = 0 with the radicand n.
FundamentalForm ruled_second_form(const RuledSpec& spec);
FundamentalForm ruled_third_form(const RuledSpec& spec);
Expr ruled_gauss_curvature(const RuledSpec& spec);
ExtElement ruled_mean_curvature(const RuledSpec& spec);

/// The operator in the (s, t) chart with P1 = c_ss, P2 = c_st, P3 = c_s,
/// P4 = c_t, P5 = c_tt.
struct RuledOperator {
  BeltramiOperator op;
  const Expr& P1() const { return op.c11; }
  const Expr& P2() const { return op.c12; }
  const Expr& P3() const { return op.c1; }
  const Expr& P4() const { return op.c2; }
  const Expr& P5() const { return op.c22; }
  std::array<Expr, 5> coefficients() const { return {op.c11, op.c12, op.c1, op.c2, op.c22}; }
};

RuledOperator ruled_third_beltrami(const RuledSpec& spec);

/// Coefficients (c_ss, c_st, c_s, c_t, c_tt) written through n, m, A and
/// their partial derivatives.
std::array<Expr, 5> ruled_pre_expansion(const RuledSpec& spec);

/// Delta(sigma_i + t rho_i) per component. Abstract specs yield one generic
/// component with sigma, rho differential symbols.
std::vector<Expr> q1_vector(const RuledSpec& spec, const RuledOperator& op);
/// P1 sigma'' + P2 rho' + P3 sigma' + P4 rho + (P1 rho'' + P3 rho') t.
std::vector<Expr> q1_assembled(const RuledSpec& spec, const RuledOperator& op);

/// Concrete operator obtained by substituting the curve invariants (and their
/// s-derivatives) into the abstract coefficients.
RuledOperator specialize(const RuledOperator& abstract_op, const RuledSpec& concrete);

/// t-degree of Delta applied to sum_{i<=d} g_i t^i with fresh symbols g_i.
struct DegreeGrowth {
  int d = 0;
  int degree = 0;
  Expr image;
};
DegreeGrowth degree_growth(const RuledSpec& spec, const RuledOperator& op, int d);

ClassificationReport ruled_classification(const RuledSpec& spec, int k_max);

}  // namespace beltrami
