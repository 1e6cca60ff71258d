#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "beltrami/finite_type/finite_type.hpp"
#include "beltrami/geometry/operator.hpp"

namespace beltrami {

/// z^2 - a x^2 - b y^2 = c on the graph chart (u, v, sqrt(omega)).
struct QuadricKindI {
  Expr a, b, c;
  SurfaceChart chart;
  Expr omega;  // c + a u^2 + b v^2
  Expr T;      // c + a(a+1) u^2 + b(b+1) v^2
  Expr A, B, C;
  bool symbolic() const { return !a.is_constant() || !b.is_constant(); }
};

/// z = a x^2/2 + b y^2/2 on the chart (u, v, z(u, v)).
struct QuadricKindII {
  Expr a, b;
  SurfaceChart chart;
  Expr g;  // 1 + a^2 u^2 + b^2 v^2
  bool symbolic() const { return !a.is_constant() || !b.is_constant(); }
};

QuadricKindI make_kind1(const Expr& a, const Expr& b, const Expr& c);
QuadricKindI kind1_symbolic();
QuadricKindII make_kind2(const Expr& a, const Expr& b);
QuadricKindII kind2_symbolic();

/// III written through omega, T, A, B, C.
FundamentalForm kind1_third_form_closed(const QuadricKindI& q);
/// Operator assembled from A, B, C and their derivatives (before the
/// reduction to polynomial coefficients).
BeltramiOperator kind1_grouped_operator(const QuadricKindI& q);

struct NamedIdentity {
  std::string name;
  Expr lhs, rhs;
  bool holds() const { return eq(lhs, rhs); }
};
/// The six reduction identities among A, B, C, omega, T.
std::vector<NamedIdentity> kind1_identities(const QuadricKindI& q);

/// Operator derived from the chart's III together with the residual
/// coefficients f1..f5 of the split into the pure-u, pure-v and f parts.
struct QuadricOperator {
  BeltramiOperator op;
  std::array<Expr, 5> f;
};

/// f1 = c_uv, f2 = c_uu + a(a+1)^2 u^6/c^2, f3 = c_vv + b(b+1)^2 v^6/c^2,
/// f4 = c_u + 3a(a+1)^2 u^5/c^2, f5 = c_v + 3b(b+1)^2 v^5/c^2.
QuadricOperator kind1_operator(const QuadricKindI& q);

FundamentalForm kind2_third_form_closed(const QuadricKindII& q);
/// c_uu = -g(1+a^2u^2)/a^2, c_vv = -g(1+b^2v^2)/b^2, c_uv = -2uvg,
/// c_u = -2ug, c_v = -2vg.
BeltramiOperator kind2_grouped_operator(const QuadricKindII& q);
/// f1 = -c_uv, f2 = -(c_uu + a^2 u^4), f3 = -(c_vv + b^2 v^4),
/// f4 = -(c_u + 2a^2 u^3), f5 = -(c_v + 2b^2 v^3).
QuadricOperator kind2_operator(const QuadricKindII& q);

struct LedgerRow {
  int k = 0;
  Expr iterate;
  Expr slice;  // iterate with the other coordinate set to 0
  int leading_degree = 0;
  Expr leading_coefficient;
  int remainder_degree = 0;  // degree of slice minus its leading term
  Expr expected_coefficient;
  int expected_degree = 0;
  int remainder_bound = 0;
  /// slice - expected * x^expected_degree has degree <= remainder_bound.
  bool holds = false;
};

using CoefficientLaw = std::function<Expr(int k)>;

/// Delta^k x for k = 1..k_max, checked against `expected(k) x^{degree(k)}`
/// plus a remainder of degree <= bound(k) on the slice other = 0.
std::vector<LedgerRow> iterate_ledger(const BeltramiOperator& op, Var x, Var other, int k_max,
                                      const CoefficientLaw& expected, const std::function<int(int)>& degree,
                                      const std::function<int(int)>& bound);

/// (-1)^k prod_{i=1}^{2k} (2i-1) p^k (p+1)^{2k} / c^{2k}.
Expr kind1_leading_law(const Expr& p, const Expr& c, int k);
/// (-1)^k (2k)! p^{2k}.
Expr kind2_leading_law(const Expr& p, int k);

std::vector<LedgerRow> kind1_iterate_u(const QuadricKindI& q, const BeltramiOperator& op, int k_max);
std::vector<LedgerRow> kind1_iterate_v(const QuadricKindI& q, const BeltramiOperator& op, int k_max);
std::vector<LedgerRow> kind2_iterate_u(const QuadricKindII& q, const BeltramiOperator& op, int k_max);
std::vector<LedgerRow> kind2_iterate_v(const QuadricKindII& q, const BeltramiOperator& op, int k_max);

/// Delta(x^d) on the slice other = 0: coefficient of x^{d + shift} and the
/// slice degree.
struct MonomialLaw {
  int d = 0;
  int degree = 0;
  Expr coefficient;
  Expr expected;
  bool holds = false;  // coefficient == expected and degree <= d + shift
};
MonomialLaw monomial_law(const BeltramiOperator& op, Var x, Var other, int d, int shift, const Expr& expected);
/// -a(a+1)^2 d(d+2)/c^2 at shift 4.
MonomialLaw kind1_monomial_law(const QuadricKindI& q, const BeltramiOperator& op, int d);
/// -a^2 d(d+1) at shift 2.
MonomialLaw kind2_monomial_law(const QuadricKindII& q, const BeltramiOperator& op, int d);

ClassificationReport kind1_classify(const QuadricKindI& q, int k_max);
ClassificationReport kind2_classify(const QuadricKindII& q, int k_max);

}  // namespace beltrami
