#pragma once

#include <vector>

#include "beltrami/algebra/poly.hpp"

namespace beltrami {

struct RationalRoot {
  Scalar value;
  int multiplicity;
};

/// Rational roots of a univariate polynomial in v (all other variables must be
/// absent), with multiplicities, in increasing order.
std::vector<RationalRoot> rational_roots(const MultiPoly& p, Var v);

/// Rational roots of the dense polynomial sum coeffs[i] x^i.
std::vector<RationalRoot> rational_roots(const std::vector<Scalar>& coeffs);

}  // namespace beltrami
