#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "beltrami/algebra/sqrt_ext.hpp"

namespace beltrami {

using Vec3 = std::array<ExtElement, 3>;

/// A parametrized surface x(u1, u2). Components may live in the extension
/// defined by `radicand` (e.g. the graph z = sqrt(omega)).
struct SurfaceChart {
  std::string name;
  Vec3 x;
  Var u1 = nullptr;
  Var u2 = nullptr;
  DerivationEnv env;
  RadicandPtr radicand;
  /// Domain restrictions carried as metadata, e.g. "omega > 0".
  std::vector<std::string> assumptions;

  std::array<Var, 2> vars() const { return {u1, u2}; }
};

/// Validates the chart (declared variables, matching extension) and fills in
/// the env if it is empty.
SurfaceChart make_chart(std::string name, Vec3 x, Var u1, Var u2, RadicandPtr radicand = nullptr,
                        std::optional<DerivationEnv> env = std::nullopt);

Vec3 partial(const Vec3& x, Var direction, const DerivationEnv& env);
ExtElement dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
/// det[a; b; c] = <a, b x c>.
ExtElement triple(const Vec3& a, const Vec3& b, const Vec3& c);
Vec3 scale(const ExtElement& k, const Vec3& a);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& a);
bool eq(const Vec3& a, const Vec3& b);

/// Exact square root of a rational function if numerator and denominator are
/// perfect squares; the root has a positive leading coefficient.
std::optional<Expr> expr_sqrt(const Expr& e);
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

}  // namespace beltrami
