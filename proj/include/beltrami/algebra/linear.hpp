#pragma once

#include <optional>
#include <vector>

#include "beltrami/algebra/sqrt_ext.hpp"

namespace beltrami {

using ExprVector = std::vector<Expr>;

/// Basis of {c in Q^n : sum_i c_i v_i = 0}, where the identity is required to
/// hold as rational functions (equivalently, for every monomial coefficient
/// after clearing denominators per component). Constants are rationals: a
/// relation with irrational constants between rational-coefficient vectors
/// would imply a rational one, so nothing is lost for such inputs.
std::vector<std::vector<Scalar>> rational_nullspace(const std::vector<ExprVector>& vectors);

/// One nontrivial rational relation, or nullopt. Empty input raises Usage.
std::optional<std::vector<Scalar>> linear_dependence(const std::vector<ExprVector>& vectors);

/// Splits extension-valued vectors into (rational part, root part) components.
std::vector<ExprVector> flatten(const std::vector<std::vector<ExtElement>>& vectors);

/// Nullspace of a dense rational matrix (rows x cols), reduced row echelon.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, std::size_t cols);

}  // namespace beltrami
